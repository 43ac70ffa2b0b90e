from typing import Any, List, Sequence

from tlsecho.controller.command_result import CommandResult


class SummaryFormatter:
    """Human-readable rendering of command results for standard output."""

    @staticmethod
    def format_cell(value: Any) -> str:
        if value is None:
            return "n/a"
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, float):
            return f"{value:.6g}"
        return str(value)

    @staticmethod
    def format_table(header: Sequence[str], rows: List[Sequence[Any]]) -> List[str]:
        cells = [[SummaryFormatter.format_cell(value) for value in row] for row in rows]
        widths = [len(name) for name in header]
        for row in cells:
            widths = [max(width, len(cell)) for width, cell in zip(widths, row)]
        lines = ["  ".join(name.rjust(width) for name, width in zip(header, widths))]
        lines.append("  ".join("-" * width for width in widths))
        lines.extend("  ".join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells)
        return lines

    @staticmethod
    def format_result(result: CommandResult) -> str:
        lines = [f"== {result.command} =="]
        for key, value in result.payload.items():
            if isinstance(value, dict) and all(not isinstance(v, (dict, list)) for v in value.values()):
                lines.append(f"{key}:")
                lines.extend(f"  {k}: {SummaryFormatter.format_cell(v)}" for k, v in value.items())
            elif not isinstance(value, (dict, list)):
                lines.append(f"{key}: {SummaryFormatter.format_cell(value)}")
        if result.table is not None and len(result.table[1]) > 1:
            lines.append("")
            lines.extend(SummaryFormatter.format_table(*result.table))
        for file_path in result.files:
            lines.append(f"wrote {file_path}")
        return "\n".join(lines)
