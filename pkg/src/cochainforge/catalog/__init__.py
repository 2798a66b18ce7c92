from .identities import REGISTRY, CatalogEntry, manifest
from .runner import (VerificationReport, all_ids, run_catalog,
                     verify_catalog_identity)
