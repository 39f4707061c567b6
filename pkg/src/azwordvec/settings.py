import os

from dotenv import load_dotenv

load_dotenv()

DEFAULT_SEED = int(os.getenv("AZWORDVEC_SEED") or 1)
# Training threads.
DEFAULT_WORKERS = int(os.getenv("AZWORDVEC_WORKERS") or 4)
LOG_LEVEL = (os.getenv("AZWORDVEC_LOG_LEVEL") or "INFO").upper()

CLOUDWATCH_LOG_GROUP = os.getenv("CLOUDWATCH_LOG_GROUP", "")
AWS_REGION_NAME = os.getenv("AWS_REGION_NAME", "")
