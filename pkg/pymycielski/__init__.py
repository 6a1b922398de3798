from pymycielski.graph import FamilyInstance, Graph, make_family, mycielskian
from pymycielski.logger import set_log_level
from pymycielski.logger import setup as setup_logs
from pymycielski.types import Family, Mode

setup_logs()

__version__ = "0.1.0"
__all__ = [
    "Family",
    "FamilyInstance",
    "Graph",
    "Mode",
    "make_family",
    "mycielskian",
    "set_log_level",
]
