import os
from dotenv import load_dotenv


load_dotenv()

# Seed for random basis changes (CLI invariance checks, tests)
GEO5_SEED = int(os.getenv("GEO5_SEED", "0"))

LOG_LEVEL = os.getenv("GEO5_LOG_LEVEL", "WARNING").upper()

# Integer grid height for the probe-based nilradical fallback
PROBE_HEIGHT = int(os.getenv("GEO5_PROBE_HEIGHT", "2"))

MAX_DEGREE = int(os.getenv("GEO5_MAX_DEGREE", "16"))

SEARCH_BOUND_LIMIT = int(os.getenv("GEO5_SEARCH_BOUND_LIMIT", "30"))

if PROBE_HEIGHT < 1:
    raise ValueError("GEO5_PROBE_HEIGHT must be at least 1")

if MAX_DEGREE < 1:
    raise ValueError("GEO5_MAX_DEGREE must be at least 1")
