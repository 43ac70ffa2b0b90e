"""File formats: parameter files, decay datasets, IQ trace sets, reports and curves."""
from .data_persistence import FORMAT_VERSION, DataPersistence
from .decay_io import dataset_from_dict, dataset_to_dict, read_decay_dataset, write_decay_dataset
from .params_io import ParamsFile, params_from_dict, params_to_dict, read_params, write_params
from .report_io import read_report, to_jsonable, write_curve_csv, write_report, write_table_csv
from .trace_io import read_trace_csv, read_trace_set, write_trace_csv, write_trace_set

__all__ = [
    "FORMAT_VERSION",
    "DataPersistence",
    "ParamsFile",
    "params_to_dict",
    "params_from_dict",
    "read_params",
    "write_params",
    "dataset_to_dict",
    "dataset_from_dict",
    "read_decay_dataset",
    "write_decay_dataset",
    "write_trace_csv",
    "read_trace_csv",
    "write_trace_set",
    "read_trace_set",
    "to_jsonable",
    "write_report",
    "read_report",
    "write_curve_csv",
    "write_table_csv",
]
