import logging
import sys

_FORMAT = "[%(levelname)s] %(name)s: %(message)s"


def configure_logging(level: str = "INFO") -> None:
    root = logging.getLogger("app")
    root.setLevel(level.upper())
    for handler in root.handlers:
        if getattr(handler, "_relmonad", False):
            handler.stream = sys.stderr
            break
    else:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler._relmonad = True
        root.addHandler(handler)
    root.propagate = False
