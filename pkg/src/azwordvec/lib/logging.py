from enum import Enum
from typing import Any, Optional, TypedDict

import json
import logging
import time

from azwordvec.settings import AWS_REGION_NAME, CLOUDWATCH_LOG_GROUP

logger = logging.getLogger(__name__)


def attach_cloudwatch_handler(target: logging.Logger) -> bool:
    """
    Ship run records to CloudWatch when a log group and region are configured.

    boto3 and watchtower are optional extras, so they are only imported when both settings are present.
    """
    if not (AWS_REGION_NAME and CLOUDWATCH_LOG_GROUP):
        return False

    import boto3
    from watchtower import CloudWatchLogHandler

    boto3_logs_client = boto3.client("logs", region_name=AWS_REGION_NAME)
    target.addHandler(CloudWatchLogHandler(boto3_client=boto3_logs_client, log_group_name=CLOUDWATCH_LOG_GROUP))
    return True


class LogType(str, Enum):
    training_epoch = "training_epoch"
    vectorization = "vectorization"
    fold_result = "fold_result"
    run = "run"


class LogRecord(TypedDict, total=False):
    log_type: LogType
    time_ns: int
    duration_ns: int

    # Fields specific to embedding training
    model_kind: str
    epoch: int
    loss: float
    learning_rate: float

    # Fields specific to evaluation
    config: str
    fold: int
    macro_f: float
    rows: int
    zero_rows: int

    # Fields specific to CLI runs
    command: str
    status: str
    line: int


def log_record(log_type: LogType, start: Optional[int] = None, **fields: Any) -> LogRecord:
    """
    Emit one structured record as a single JSON line on the package logger.

    If `start` (from `time.time_ns()`) is given, the elapsed time is recorded as `duration_ns`.
    """
    now = time.time_ns()
    record: LogRecord = {"log_type": log_type, "time_ns": now}
    if start is not None:
        record["duration_ns"] = now - start
    record.update(fields)  # type: ignore[typeddict-item]

    logger.info(json.dumps(record))
    return record
