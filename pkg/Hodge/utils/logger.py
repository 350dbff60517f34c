"""
Logging facilities

These are thin wrappers around a `twisted.logger.Logger` so that every
module logs the same way. Messages are PEP-3101 format strings; keyword
arguments become fields of the structured event and are substituted
into the message when it is rendered, for example

    log_info("length {length}: {unknowns} unknowns", length=5, unknowns=12)

Nothing is printed until `start_console_logging` attaches an observer.
Only the launcher's process entry point does that, so importing the
library or running the tests never touches the global log beginner.

"""

import sys

from twisted.logger import (
    FilteringLogObserver,
    LogLevel,
    LogLevelFilterPredicate,
    Logger,
    globalLogBeginner,
    textFileLogObserver,
)

_LOGGER = Logger(namespace="hodge")


def log_trace(errmsg=None, **kwargs):
    """
    Log the current exception together with its traceback. Call this
    from inside an `except` block.

    Args:
        errmsg (str, optional): Message to put in front of the traceback.

    """
    _LOGGER.failure(errmsg or "Unhandled error", level=LogLevel.error, **kwargs)


def log_err(errmsg, **kwargs):
    """
    Log an error.

    Args:
        errmsg (str): Format string of the message.

    """
    _LOGGER.error(errmsg, **kwargs)


def log_warn(warnmsg, **kwargs):
    """
    Log a warning.

    Args:
        warnmsg (str): Format string of the message.

    """
    _LOGGER.warn(warnmsg, **kwargs)


def log_info(infomsg, **kwargs):
    """
    Log progress information.

    Args:
        infomsg (str): Format string of the message.

    """
    _LOGGER.info(infomsg, **kwargs)


def start_console_logging(level="warn", stream=None):
    """
    Send log events at or above `level` to a text stream.

    Args:
        level (str): One of "debug", "info", "warn", "error", "critical".
        stream (file, optional): Where to write; defaults to stderr.

    """
    predicate = LogLevelFilterPredicate(defaultLogLevel=LogLevel.levelWithName(level))
    observer = FilteringLogObserver(textFileLogObserver(stream or sys.stderr), [predicate])
    globalLogBeginner.beginLoggingTo([observer], discardBuffer=True, redirectStandardIO=False)
