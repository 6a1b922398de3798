import logging
import textwrap


class MultiLineFormatter(logging.Formatter):
    def format(self, record):
        message = record.getMessage()
        record.msg, record.args = "", None
        header = super().format(record)
        msg = textwrap.indent(message, " " * len(header)).lstrip()
        record.msg = message
        return header + msg


def setup(level: int = logging.WARNING):
    logger = logging.getLogger("pymycielski")
    logger.setLevel(level)
    if any(getattr(h, "_pymycielski", False) for h in logger.handlers):
        return

    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(MultiLineFormatter("%(levelname)s: %(message)s"))
    setattr(stream_handler, "_pymycielski", True)
    logger.addHandler(stream_handler)


def set_log_level(level: int):
    """Set message level for logging.

    Args:
        level (int): Message level, recommended to use constants provided by logging
            module.
    """
    logging.getLogger("pymycielski").setLevel(level)
