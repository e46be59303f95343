import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent.parent.parent
REPORT_DIR = Path(os.getenv("REXLAB_REPORT_DIR", str(BASE_DIR / "reports")))
