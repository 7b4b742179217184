"""Put the project root on sys.path so tests import config and src like app.py does"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
