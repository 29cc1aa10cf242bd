DEFAULT_RW_CONFIG = """
budget: 100000000
workers: 1
dot:
  rankdir: LR
  nodesep: 0.3
  ranksep: 2.0
"""
