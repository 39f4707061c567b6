"""
Environment setup for scripts.
"""

import logging

from azwordvec.lib.logging import attach_cloudwatch_handler
from azwordvec.settings import LOG_LEVEL


def init_script_environment(level: str = LOG_LEVEL) -> logging.Logger:
    """
    Set up the environment for a command that is run from the command line.

    Features:
    - Configures logging for the script and the azwordvec package.
    - Attaches the CloudWatch handler when CLOUDWATCH_LOG_GROUP and AWS_REGION_NAME are set.
    - Returns the package logger.
    """

    logging.basicConfig(format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    logging.getLogger("__main__").setLevel(level)
    package_logger = logging.getLogger("azwordvec")
    package_logger.setLevel(level)
    # Un-comment this line to silence the JSON run records:
    # logging.getLogger("azwordvec.lib.logging").setLevel(logging.WARNING)

    attach_cloudwatch_handler(package_logger)

    return package_logger
