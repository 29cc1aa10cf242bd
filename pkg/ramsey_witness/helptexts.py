c = """A path to your own YAML config file, merged over the defaults."""

budget = """Maximum number of primitive checks an enumeration may spend.
Overrides the config file and the RW_BUDGET environment variable."""

v = """Show verbose output, including exceptions."""

f = """Toggle the output format. Currently default or "-f json"."""

dot = """Also write the result as a Graphviz DOT file to this path."""

n = """Number of left vertices."""

k = """Number of right vertices of K_{n,k}, or the subset size of B_{n,k}."""

explicit = """List every right vertex and edge instead of the implicit
"setgraph" header."""

a = """Number of left vertices of the copy to extract."""

b = """Number of right vertices of K_{a,b}, or the subset size of B_{a,b}."""

s = """Size of the homogeneous set to search for."""

arity = """Size of the colored subsets."""

palette = """Number of colors."""

size = """Size of the homogeneous set."""

max_n = """Give up (exit code 1) when the number exceeds this value."""

workers = """Number of worker processes for the enumeration."""

confirm_next = """Also check that n + 1 admits no avoiding coloring."""

counterexample = """Write the largest avoiding coloring found to this
path."""

homogeneous = """A file holding the homogeneous set, integers separated by
whitespace or commas."""

host = """Host document (graph or coloring) to check the witness against."""

witness = """Witness document to highlight."""

color = """Edge color, R or B."""

seed = """Seed for the random number generator."""

not_induced = """Accept copies whose host adjacency is a superset of the
pattern's (plain subgraph)."""

oracle = """Use the brute-force search instead of the constructive
pipeline. Works on any host."""
