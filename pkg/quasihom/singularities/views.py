# quasihom/singularities/views.py

"""
Read-only JSON endpoints.

- `analyze`: `GET /api/analyze/?weights=27,16,10,1&degree=81` (or
  `?weights=1/3,1/4&normalized=1`), the same report as `manage.py analyze`.
- `blocks`: `GET /api/blocks/?m=1,2,4`, the same report as `manage.py blocks`.

Both are plain functions of their query string; errors are mapped to JSON by
`json_errors`.
"""

# Standard library imports
import logging

# Django imports
from django.http import HttpRequest, JsonResponse
from django.views.decorators.http import require_GET

# Local application imports
from .exceptions import InvalidInputError
from .reports import analyze as analyze_report
from .reports import blocks_report
from .utils import json_errors, parse_int_list, required_param
from .weights import WeightSystem

LOGGER = logging.getLogger(__name__)


def _weight_system(request: HttpRequest) -> WeightSystem:
    weights = required_param(request, "weights")
    if request.GET.get("normalized") in ("1", "true"):
        return WeightSystem.from_normalized(part for part in weights.split(",") if part)
    try:
        degree = int(required_param(request, "degree"))
    except ValueError as e:
        raise InvalidInputError(f"degree must be an integer: {e}") from e
    return WeightSystem.parse(weights, degree)


@require_GET
@json_errors
def analyze(request: HttpRequest) -> JsonResponse:
    ws = _weight_system(request)
    LOGGER.info(f"API analyze {ws}")
    return JsonResponse(analyze_report(ws))


@require_GET
@json_errors
def blocks(request: HttpRequest) -> JsonResponse:
    M = parse_int_list(required_param(request, "m"), "set M")
    return JsonResponse(blocks_report(M))
