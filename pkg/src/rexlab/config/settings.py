import os
from dotenv import load_dotenv

load_dotenv()

# Random generation
DEFAULT_SEED = int(os.getenv("REXLAB_SEED", "20100701"))

# Rewriting modulo equations
CLASS_CAP = int(os.getenv("REXLAB_CLASS_CAP", "10000"))
JOIN_DEPTH = int(os.getenv("REXLAB_JOIN_DEPTH", "8"))

# Normalization
MAX_STEPS = int(os.getenv("REXLAB_MAX_STEPS", "1000"))

# Property suites
MAX_COUNTEREXAMPLES = int(os.getenv("REXLAB_MAX_COUNTEREXAMPLES", "20"))
RANDOM_CASES = int(os.getenv("REXLAB_RANDOM_CASES", "10000"))

# Logging
LOG_LEVEL = os.getenv("REXLAB_LOG_LEVEL", "WARNING").upper()
