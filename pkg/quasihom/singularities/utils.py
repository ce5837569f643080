# quasihom/singularities/utils.py

"""
Helpers for the JSON views.

`json_errors` turns the library's exception family into JSON error responses,
so the views only deal with the successful path. The two parsing helpers read
query parameters and raise `InvalidInputError` on anything malformed, which the
decorator then reports with status 400.
"""

# Standard library imports
import logging
from functools import wraps
from typing import List

# Django imports
from django.http import HttpRequest, JsonResponse

# Local application imports
from .exceptions import InvalidInputError, PreconditionError, QuasihomError, ResourceLimitError

# Initialize a logger for this module.
logger = logging.getLogger(__name__)


def status_for(error: QuasihomError) -> int:
    """
    Maps a library error to an HTTP status code.

    Subclasses are checked before their bases, so `NotIntegralError` and
    `MissingPrimeError` report 422 like every other `PreconditionError`.

    Args:
        error: The exception raised by the library.

    Returns:
        413 for oversized input, 422 for unmet preconditions, 400 otherwise.
    """
    if isinstance(error, ResourceLimitError):
        return 413
    if isinstance(error, PreconditionError):
        return 422
    return 400


def json_errors(view_func):
    """
    A Django view decorator mapping `QuasihomError` to JSON error responses.

    How it works:
    1.  **Success:** the view's own response is returned untouched.
    2.  **Library error:** the exception is logged as a warning together with
        the request path, and answered with `{"error": message, "type": name}`
        under the status chosen by `status_for`.
    3.  **Anything else:** propagates to Django, which answers with a 500.

    Usage:
        @json_errors
        def my_view(request):
            # Only the successful path lives here.
            ...
    """
    @wraps(view_func)
    def wrapper(request: HttpRequest, *args, **kwargs):
        """The actual wrapper that performs the mapping."""
        try:
            return view_func(request, *args, **kwargs)

        except QuasihomError as e:
            # --- Library errors become 4xx responses ---
            status = status_for(e)
            logger.warning(f"{request.path} rejected with {status}: {e}")
            return JsonResponse({"error": str(e), "type": type(e).__name__}, status=status)

    return wrapper


def required_param(request: HttpRequest, name: str) -> str:
    """
    Reads a mandatory query parameter.

    Args:
        request: The incoming GET request.
        name: The name of the query parameter, e.g. "weights".

    Returns:
        The parameter value with surrounding whitespace removed.

    Raises:
        InvalidInputError: If the parameter is absent or blank.
    """
    value = request.GET.get(name, "").strip()
    if not value:
        raise InvalidInputError(f"Missing query parameter {name!r}")
    return value


def parse_int_list(text: str, what: str = "list") -> List[int]:
    """
    Parses a comma-separated list of integers, e.g. "1,2,4" into [1, 2, 4].

    Spaces are ignored and empty items are skipped, so "1, 2,,4" parses too.
    Range checks (positivity, the degree bound) belong to the caller.

    Args:
        text: The raw parameter value.
        what: What the list holds, used in the error message.

    Raises:
        InvalidInputError: If an item is not an integer.
    """
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError as e:
        raise InvalidInputError(f"Cannot parse {what} {text!r}: {e}") from e
