"""
Main entry point for Turannical.

Runs the command-line interface.
"""

import logging
import sys
from typing import List, Optional

from turannical.config.constants import EXIT_FAILURE, EXIT_PARAMETER
from turannical.errors import ParameterError, TurannicalError
from turannical.ui.cli import build_parser, run_command

logger = logging.getLogger("turannical")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one turannical command.

    Returns:
        0 on success, 2 on parameter or input errors, 3 when `decide`
        cannot reach a verdict within its budget
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return run_command(args)
    except ParameterError as e:
        logger.error("%s", e)
        return EXIT_PARAMETER
    except (FileNotFoundError, IsADirectoryError) as e:
        logger.error("Cannot read %s: %s", e.filename, e.strerror)
        return EXIT_PARAMETER
    except TurannicalError as e:
        logger.error("Internal check failed: %s", e)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
