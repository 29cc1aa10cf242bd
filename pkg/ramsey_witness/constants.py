DEFAULT_BUDGET = 10 ** 8
BUDGET_ENV = 'RW_BUDGET'
SLOW_TESTS_ENV = 'RW_SLOW_TESTS'

EXIT_FOUND = 0
EXIT_ABSENT = 1
EXIT_BUDGET = 2
EXIT_INPUT = 3
