"""
Hodge settings

All run-time configuration lives here as module-level constants. There
are no environment variables: the command line flags override these
values for a single run, and tests patch them with `mock`.

"""

######################################################################
# Truncation
######################################################################

# Total-degree truncation used when --order is not given. Order 10
# reaches every branch of the three recursion schedules.
DEFAULT_ORDER = 10
# Smallest order that still holds the length-three integrals.
MIN_ORDER = 3
# Cap on --order. Running time grows steeply with the order.
MAX_ORDER = 16
# The trig identities are cheap, so their suite never runs below this.
TRIG_ORDER = 12

######################################################################
# Output
######################################################################

DEFAULT_FORMAT = "json"
FORMATS = ("json", "csv")
# Route used by `expand` when --route is not given.
DEFAULT_ROUTE = "closed"
ROUTES = ("closed", "recursion")

######################################################################
# Groups
######################################################################

# Command line group names and the internal group names they select.
GROUP_ALIASES = {
    "z2z2": "Z2xZ2",
    "a4": "A4",
    "s4": "S4",
}

######################################################################
# Verification
######################################################################

VERIFY_CHECKS = ("theorem1", "wdvv", "specializations", "trig", "recursion", "all")

######################################################################
# Logging
######################################################################

# Console log level of the launcher, and the level used with --verbose.
LOG_LEVEL = "warn"
VERBOSE_LOG_LEVEL = "info"
