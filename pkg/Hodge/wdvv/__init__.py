"""
WDVV identities and the recursion schedules that recompute every
integral from seed data.

"""
