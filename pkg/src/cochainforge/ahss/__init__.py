from .bridge import model_from_complex
from .engine import (ConvergenceReport, SpectralSequencePage, apply_d3,
                     converge, factorization_targets, init_pages)
from .model import CohomologyModel, Constraint, ModelError
