"""
Running identity checks
=======================

Each named check rebuilds its objects from the prime and reports both sides
of the comparison.  Reports serialize to JSON lines, CSV or plain text.
"""

from balanced_pairing import identity_suite as suite

# the registry of checks
print(sorted(suite.CHECKS))

# every applicable check at one prime
for report in suite.run_checks(13, suite.CHECKS, m_values=(1, 2)):
    print(report.to_human())

# primes = 3 mod 4 only get the checks that make sense there
print([r.check_id for r in suite.run_checks(7, suite.CHECKS)])

# machine-readable forms
r = suite.check_balanced(29)
print(r.to_json())
print(r.to_csv_row())
