"""Shared logger setup for ipgeom.closure"""

import logging

PACKAGE_LOGGER = "ipgeom.closure"


def init_log(name=PACKAGE_LOGGER, level=None):
    logger = logging.getLogger(name)
    # Turn logging to WARNING if not set
    llevel = logger.getEffectiveLevel()
    if level is not None:
        set_log_level(logger, level)
    elif llevel == logging.NOTSET:
        logger.setLevel(logging.WARNING)
    set_log_to_stderr(logger)
    return logger


def set_log_level(logger, level):
    if isinstance(level, str):
        level = level.upper()
    logger.setLevel(level)


def remove_handlers(logger):
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()


def set_log_to_stderr(logger):
    remove_handlers(logger)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)


def set_log_to_null(logger):
    remove_handlers(logger)
    logger.addHandler(logging.NullHandler())


def set_log_to_file(logger, filename):
    remove_handlers(logger)
    handler = logging.FileHandler(filename, encoding="utf-8")
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
