import os
from dotenv import load_dotenv

VERSION = '1.0.0'

DEFAULT_TOLERANCE = 1e-10
DEFAULT_N_SAMPLES = 1024
DEFAULT_K_MAX_MARGIN = 30
DEFAULT_RESONANCE_TOLERANCE = 1e-3
DEFAULT_ANALYTIC_GUARD_BAND = 1e-6
DEFAULT_ROUTE_AGREEMENT = 1e-6
DEFAULT_TAIL_WARNING_THRESHOLD = 1e-10
DEFAULT_WEAK_COUPLING_RATIO = 0.5
DEFAULT_RWA_ACTIVE_WINDOW = 10.0
DEFAULT_POSITIVITY_WARNING = 1e-8
DEFAULT_POSITIVITY_LIMIT = 1e-6
DEFAULT_STEADY_STATE_MAX_ITERATIONS = 1_000_000
DEFAULT_WORKERS = 1
DEFAULT_LOG_LEVEL = 'INFO'
DEFAULT_SHOW_PROGRESS = True

# Boltzmann constant over Planck constant, in GHz per kelvin
KB_OVER_H_GHZ_PER_K = 20.836619

#------------------------------

load_dotenv()

TOLERANCE = float(os.getenv('SPECTROSCOPE_TOLERANCE', DEFAULT_TOLERANCE))
N_SAMPLES = int(os.getenv('SPECTROSCOPE_N_SAMPLES', DEFAULT_N_SAMPLES))
K_MAX_MARGIN = int(os.getenv('SPECTROSCOPE_K_MAX_MARGIN', DEFAULT_K_MAX_MARGIN))
RESONANCE_TOLERANCE = float(os.getenv('SPECTROSCOPE_RESONANCE_TOLERANCE', DEFAULT_RESONANCE_TOLERANCE))
ANALYTIC_GUARD_BAND = float(os.getenv('SPECTROSCOPE_ANALYTIC_GUARD_BAND', DEFAULT_ANALYTIC_GUARD_BAND))
ROUTE_AGREEMENT = float(os.getenv('SPECTROSCOPE_ROUTE_AGREEMENT', DEFAULT_ROUTE_AGREEMENT))
TAIL_WARNING_THRESHOLD = float(os.getenv('SPECTROSCOPE_TAIL_WARNING_THRESHOLD', DEFAULT_TAIL_WARNING_THRESHOLD))
WEAK_COUPLING_RATIO = float(os.getenv('SPECTROSCOPE_WEAK_COUPLING_RATIO', DEFAULT_WEAK_COUPLING_RATIO))
RWA_ACTIVE_WINDOW = float(os.getenv('SPECTROSCOPE_RWA_ACTIVE_WINDOW', DEFAULT_RWA_ACTIVE_WINDOW))
POSITIVITY_WARNING = float(os.getenv('SPECTROSCOPE_POSITIVITY_WARNING', DEFAULT_POSITIVITY_WARNING))
POSITIVITY_LIMIT = float(os.getenv('SPECTROSCOPE_POSITIVITY_LIMIT', DEFAULT_POSITIVITY_LIMIT))
STEADY_STATE_MAX_ITERATIONS = int(os.getenv('SPECTROSCOPE_STEADY_STATE_MAX_ITERATIONS', DEFAULT_STEADY_STATE_MAX_ITERATIONS))
DEFAULT_WORKER_COUNT = int(os.getenv('SPECTROSCOPE_WORKERS', DEFAULT_WORKERS))
LOG_LEVEL = os.getenv('LOG_LEVEL', DEFAULT_LOG_LEVEL).upper()
SHOW_PROGRESS = str(os.getenv('SHOW_PROGRESS', DEFAULT_SHOW_PROGRESS)).lower() in ('t', 'true', '1', 'y', 'yes')
