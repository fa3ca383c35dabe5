import logging
import os
import sys
from pathlib import Path

from dotenv import load_dotenv

# Base directory for the project
BASE_DIR = Path(__file__).resolve().parent

# Pick up IHX_* overrides from a local .env file
load_dotenv(BASE_DIR / ".env")

# Logging configuration
LOG_DIR = Path(os.environ.get("IHX_LOG_DIR", BASE_DIR / "logs"))
LOG_FILE = LOG_DIR / "ihx.log"
LOG_LEVEL = os.environ.get("IHX_LOG_LEVEL", "INFO").upper()
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Run ledger (only touched when a command is given --record)
DATABASE_URL = os.environ.get("IHX_DATABASE_URL", f"sqlite:///{BASE_DIR / 'ihx_ledger.db'}")

# Chain-level computations above this many simplices need --force-chains
CHAIN_LEVEL_SIMPLEX_LIMIT = int(os.environ.get("IHX_CHAIN_LIMIT", "20000"))

# Prime used by the modular rank fast path (2^31 - 1)
DEFAULT_RANK_PRIME = int(os.environ.get("IHX_RANK_PRIME", "2147483647"))

DEFAULT_SUBDIVISIONS = 0

# Exit codes of the command line front end
EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_BAD_INPUT = 2
EXIT_MISMATCH = 3

# The four standard perversities, in report order
STANDARD_PERVERSITIES = ("zero", "lower-middle", "upper-middle", "top")

# Gallery names, in the stable order used by `list`
GALLERY_ORDER = (
    "point",
    "circle",
    "sphere2",
    "torus2",
    "pinched_torus",
    "susp_torus2",
    "torus3_2p",
    "susp_torus3_2p",
    "susp_torus3_2p_x_sphere2",
)

# Subdivision level pinned per gallery space for IH computations
GALLERY_SUBDIVISIONS = {name: DEFAULT_SUBDIVISIONS for name in GALLERY_ORDER}

# Expected-value cards for every gallery space. Components are keyed by
# "stratum:component"; perversities by their CLI spelling.
GALLERY_EXPECTED = {
    "point": {
        "dimension": 0,
        "homology": [1],
        "ih": {p: [1] for p in STANDARD_PERVERSITIES},
        "ichi": {p: 1 for p in STANDARD_PERVERSITIES},
        "converse": False,
    },
    "circle": {
        "dimension": 1,
        "homology": [1, 1],
        "ih": {p: [1, 1] for p in STANDARD_PERVERSITIES},
        "ichi": {p: 0 for p in STANDARD_PERVERSITIES},
        "converse": True,
    },
    "sphere2": {
        "dimension": 2,
        "homology": [1, 0, 1],
        "ih": {p: [1, 0, 1] for p in STANDARD_PERVERSITIES},
        "ichi": {p: 2 for p in STANDARD_PERVERSITIES},
        "converse": False,
    },
    "torus2": {
        "dimension": 2,
        "homology": [1, 2, 1],
        "ih": {p: [1, 2, 1] for p in STANDARD_PERVERSITIES},
        "ichi": {p: 0 for p in STANDARD_PERVERSITIES},
        "converse": True,
    },
    "pinched_torus": {
        "dimension": 2,
        "homology": [1, 1, 1],
        "ih": {p: [1, 0, 1] for p in STANDARD_PERVERSITIES},
        "ichi": {p: 2 for p in STANDARD_PERVERSITIES},
        "multiplicities": {"1:0": {p: 2 for p in STANDARD_PERVERSITIES}},
        "converse": False,
    },
    "susp_torus2": {
        "dimension": 3,
        "homology": [1, 0, 2, 1],
        "ih": {
            "zero": [1, 2, 0, 1],
            "lower-middle": [1, 2, 0, 1],
            "upper-middle": [1, 0, 2, 1],
            "top": [1, 0, 2, 1],
        },
        "ichi": {"zero": -2, "lower-middle": -2, "upper-middle": 2, "top": 2},
        "multiplicities": {
            "1:0": {"zero": -1, "lower-middle": -1, "upper-middle": 1, "top": 1},
            "1:1": {"zero": -1, "lower-middle": -1, "upper-middle": 1, "top": 1},
        },
        "converse": False,
    },
    "torus3_2p": {
        "dimension": 3,
        "homology": [1, 1, 4, 2],
        "ih": {
            "zero": [2, 4, 0, 2],
            "lower-middle": [2, 4, 0, 2],
            "upper-middle": [2, 0, 4, 2],
            "top": [2, 0, 4, 2],
        },
        "ichi": {"zero": -4, "lower-middle": -4, "upper-middle": 4, "top": 4},
        "multiplicities": {
            "1:0": {"zero": -2, "lower-middle": -2, "upper-middle": 2, "top": 2},
            "1:1": {"zero": -2, "lower-middle": -2, "upper-middle": 2, "top": 2},
        },
        "converse": False,
    },
    "susp_torus3_2p": {
        "dimension": 4,
        "homology": [1, 0, 1, 4, 2],
        "ih": {
            "zero": [2, 4, 0, 0, 2],
            "lower-middle": [2, 4, 0, 0, 2],
            "upper-middle": [2, 0, 0, 4, 2],
            "top": [2, 0, 0, 4, 2],
        },
        "ichi": {p: 0 for p in STANDARD_PERVERSITIES},
        "multiplicities": {
            key: {"zero": 2, "lower-middle": 2, "upper-middle": -2, "top": -2}
            for key in ("1:0", "1:1", "2:0", "2:1")
        },
        "converse": False,
    },
    "susp_torus3_2p_x_sphere2": {
        "dimension": 6,
        "ih": {
            "zero": [2, 4, 2, 4, 2, 0, 2],
            "lower-middle": [2, 4, 2, 4, 2, 0, 2],
            "upper-middle": [2, 0, 2, 4, 2, 4, 2],
            "top": [2, 0, 2, 4, 2, 4, 2],
        },
        "ichi": {p: 0 for p in STANDARD_PERVERSITIES},
        "converse": False,
        "converse_witness_chi_c": 2,
    },
}


def configure_logging(level=None):
    """Set up the file and console handlers shared by every module logger"""
    LOG_DIR.mkdir(parents=True, exist_ok=True)
    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=[
            logging.FileHandler(LOG_FILE),
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )
