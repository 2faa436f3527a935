"""Result persistence: output streams and row serialization."""
from .row_writer import COLUMNS, format_float, write_csv, write_json, write_rows
from .stream import open_output

__all__ = ['COLUMNS', 'format_float', 'write_csv', 'write_json', 'write_rows', 'open_output']
