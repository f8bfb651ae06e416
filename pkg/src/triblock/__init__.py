"""Exact tools for triangle blocking arrangements and blocking configurations."""

from .arrangement import (BuildError, GeometryError, Region, Subdivision,
                          TriangleArrangement, VertexRecord, beta,
                          blocks_internally, build, induce, minimal_regions,
                          subdivision)
from .duality import (BlockingConfig, PrimalConfig, counting_lower_bound,
                      dualize_config, find_min_triangle, ngon_certificate,
                      pipeline_classify, quadrangle_example,
                      region_blocking_audit, verify_primal_blocking)
from .fileio import TbaParseError, emit_tba, parse_tba
from .fuzz import fuzz_driver
from .kernel import (HLine, HPoint, Overlap, Point2, PointHit, Rat, Seg,
                     concurrent, dual_line, dual_point, line_join, line_meet,
                     orient, pt, seg, seg_intersection)
from .render import RenderSpec, render_svg
from .taxonomy import (ClassifyResult, Labeling, TagB0, TagB1, TagB2, TagB3,
                       TagI1, TagI2, TagT, TypeTag, classify, generate,
                       hexagrid_recognize, hexgrid_example, parse_tag)
from .validator import (ParityReport, Verdict, ViolationReport,
                        check_condition_a, check_condition_i,
                        check_condition_ii, parity_audit, validate)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
