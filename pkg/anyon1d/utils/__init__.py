from .helpers import create_initial_state, print_results
from .writers import load_schema, to_jsonable, write_json, write_table

__all__ = [
    'create_initial_state',
    'print_results',
    'load_schema',
    'to_jsonable',
    'write_json',
    'write_table',
]
