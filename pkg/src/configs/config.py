TOOL_NAME = "kred"
TOOL_VERSION = "1.0.0"

# Primality is answered deterministically only below this ceiling.
PRIMALITY_CEILING = 2**64

# Period detection: a candidate period t must be confirmed over
# max(PERIOD_MIN_CYCLES * t, t + min(PERIOD_MIN_CONFIRMED, W // 2)) terms.
PERIOD_MIN_CYCLES = 3
PERIOD_MIN_CONFIRMED = 64
DEFAULT_MAX_PERIOD = 2000

# Engine positions between two state-file checkpoints during a scan.
CHECKPOINT_INTERVAL = 500

DEFAULT_WORKERS = 4

STATE_FORMAT_TAG = "KREDSTATE"
STATE_FORMAT_VERSION = 1
