from .parser import build_parser
from .summary import SummaryFormatter

__all__ = ["build_parser", "SummaryFormatter"]
