import random
import re

import pytest

from minmaxmst import (
    Weighting,
    compile_mst_circuit,
    compile_mst_circuit_naive,
    complete_graph,
    count_ops,
    evaluate,
    format_circuit,
    mst_puredp,
    mst_puredp_naive,
    naive_op_counts,
    parse_graph,
    puredp_op_counts,
)
from conftest import random_instances

LINE_RE = re.compile(
    r"^\d+ = (input \d+|const 0|min \d+ \d+|max \d+ \d+|add \d+ \d+)$"
)


class TestCompile:
    def test_deterministic(self, triangle):
        g, _ = triangle
        assert format_circuit(compile_mst_circuit(g)) == format_circuit(compile_mst_circuit(g))

    def test_structure_is_weight_free(self):
        for g, x in random_instances(10, seed=41, max_n=9):
            c = compile_mst_circuit(g)
            mst_puredp(g, x)  # solving in between must not influence compilation
            assert format_circuit(compile_mst_circuit(g)) == format_circuit(c)

    def test_operands_precede_node(self):
        g = complete_graph(5)
        for c in (compile_mst_circuit(g), compile_mst_circuit_naive(g)):
            for i, node in enumerate(c.nodes):
                if node[0] in ("min", "max", "add"):
                    assert node[1] < i and node[2] < i

    def test_one_input_per_edge(self):
        for g, _ in random_instances(6, seed=42, max_n=8):
            c = compile_mst_circuit(g)
            inputs = [node[1] for node in c.nodes if node[0] == "input"]
            assert inputs == list(range(g.m))

    def test_no_branching_or_subtraction_node_kinds(self):
        g = complete_graph(6)
        for c in (compile_mst_circuit(g), compile_mst_circuit_naive(g)):
            kinds = {node[0] for node in c.nodes}
            assert kinds <= {"input", "const", "min", "max", "add"}
            assert all(node[1] == 0.0 for node in c.nodes if node[0] == "const")

    def test_single_edge_circuit(self):
        g, x = parse_graph("2 1\n1 2 7\n")
        c = compile_mst_circuit(g)
        assert sum(node[0] == "input" for node in c.nodes) == 1
        assert evaluate(c, x) == 7.0

    def test_single_vertex_circuit(self):
        g, _ = parse_graph("1 0\n")
        c = compile_mst_circuit(g)
        assert evaluate(c, []) == 0.0
        assert count_ops(c).total == 0


class TestEvaluate:
    def test_matches_solver(self):
        for g, x in random_instances(30, seed=43, max_n=10):
            c = compile_mst_circuit(g)
            assert evaluate(c, x) == mst_puredp(g, x)[0]

    def test_naive_circuit_matches_naive_solver(self):
        for g, x in random_instances(10, seed=44, max_n=7):
            c = compile_mst_circuit_naive(g)
            assert evaluate(c, x) == mst_puredp_naive(g, x)[0]

    def test_reusable_across_weightings(self, triangle):
        g, _ = triangle
        c = compile_mst_circuit(g)
        assert evaluate(c, [1, 3, 2]) == 3.0
        assert evaluate(c, [10, 1, 10]) == 11.0
        assert evaluate(c, [0, 0, 0]) == 0.0

    def test_monotone(self):
        rng = random.Random(45)
        for g, x in random_instances(15, seed=46, max_n=8, max_weight=50):
            c = compile_mst_circuit(g)
            higher = [w + rng.randint(0, 10) for w in x.values]
            assert evaluate(c, x) <= evaluate(c, higher)

    def test_arity_mismatch(self, triangle):
        g, _ = triangle
        c = compile_mst_circuit(g)
        with pytest.raises(ValueError, match="3 input values"):
            evaluate(c, [1.0, 2.0])


class TestCountOps:
    def test_matches_instrumented_solver(self):
        shapes = [
            parse_graph("2 1\n1 2 1\n")[0],
            parse_graph("5 4\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n")[0],
            parse_graph("4 3\n1 2 1\n1 3 1\n1 4 1\n")[0],
            complete_graph(6),
        ] + [g for g, _ in random_instances(8, seed=47, max_n=9)]
        for g in shapes:
            x = Weighting([1] * g.m)
            assert count_ops(compile_mst_circuit(g)) == mst_puredp(g, x)[1]
            assert count_ops(compile_mst_circuit_naive(g)) == mst_puredp_naive(g, x)[1]

    def test_naive_strictly_larger_on_k8(self):
        g = complete_graph(8)
        lean = count_ops(compile_mst_circuit(g))
        naive = count_ops(compile_mst_circuit_naive(g))
        assert naive.total > lean.total
        assert lean == puredp_op_counts(8, 28)
        assert naive == naive_op_counts(8, 28)

    def test_cubic_growth_of_compiled_circuits(self):
        ratios = []
        for n in (4, 8, 16, 32, 64):
            total = count_ops(compile_mst_circuit(complete_graph(n))).total
            assert total == puredp_op_counts(n, n * (n - 1) // 2).total
            assert total <= 10 * n**3
            ratios.append(total / n**3)
        # constant-bounded, with shrinking increments (levels off below 3)
        assert all(r < 3.0 for r in ratios)
        steps = [b - a for a, b in zip(ratios, ratios[1:])]
        assert all(s >= 0 for s in steps)
        assert steps == sorted(steps, reverse=True)

    def test_quartic_bound_for_naive(self):
        for n in (8, 12, 16):
            total = count_ops(compile_mst_circuit_naive(complete_graph(n))).total
            assert total <= 1.5 * n**4


class TestFormat:
    def test_grammar(self, triangle):
        g, _ = triangle
        text = format_circuit(compile_mst_circuit(g))
        lines = text.splitlines()
        assert re.fullmatch(r"output \d+", lines[-1])
        for line in lines[:-1]:
            assert LINE_RE.fullmatch(line), line

    def test_ids_are_dense(self, triangle):
        g, _ = triangle
        text = format_circuit(compile_mst_circuit(g))
        ids = [int(line.split()[0]) for line in text.splitlines()[:-1]]
        assert ids == list(range(len(ids)))
