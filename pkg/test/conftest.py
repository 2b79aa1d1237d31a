import pytest


@pytest.fixture(autouse=True)
def _nose_with_setup(request):
    """Honor nose's @with_setup, which pytest >= 8 no longer runs."""
    function = getattr(request, "function", None)
    setup = getattr(function, "setup", None)
    teardown = getattr(function, "teardown", None)
    if callable(setup):
        setup()
    yield
    if callable(teardown):
        teardown()
