"""Running part of the verification suite from Python instead of the CLI.

Run: python demos/04_verify_suite.py
The same checks are available as ``braidcong verify all``.
"""

from braidcong.suite import SuiteConfig, run_suite

cfg = SuiteConfig(seed=1, random_words=500, per_stratum=200, n_values=(3, 4, 5))
report = run_suite(cfg, ("relations", "forgetful", "pointpush"))
print(report.render())
print("exit code:", report.exit_code())
