import datetime

from ulid import ULID


def new_run_id() -> ULID:
    """ULID stamped with the current local time, timezone included."""
    tz_aware_now = datetime.datetime.now().astimezone()
    return ULID.from_datetime(tz_aware_now)
