"""DIMACS parsing, the weight rule, and .ewclq round trips."""

import logging

import pytest

from ewmcp.errors import ParseError
from ewmcp.generators import gen_g3, gen_random
from ewmcp.graph import WeightedGraph, total_edge_weight
from ewmcp.instance_io import (
    InstanceSpec,
    apply_weight_rule,
    parse_dimacs,
    read_instance,
    rule_weight,
    write_instance,
)


class TestParseDimacs:
    def test_path_graph(self):
        g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3")
        assert g.n == 3
        assert g.edges == ((1, 2, 0), (2, 3, 0))

    def test_comments_ignored(self):
        g = parse_dimacs("c a comment\nc another\np edge 2 1\ne 1 2\n")
        assert g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(ParseError, match="self-loop"):
            parse_dimacs("p edge 2 1\ne 1 1")

    def test_duplicate_edges_deduplicated_with_warning(self, caplog):
        with caplog.at_level(logging.WARNING):
            g = parse_dimacs("p edge 3 3\ne 1 2\ne 1 2\ne 2 3")
        assert g.m == 2
        assert any("duplicate edge" in r.message for r in caplog.records)

    def test_count_mismatch_warns_not_fails(self, caplog):
        with caplog.at_level(logging.WARNING):
            g = parse_dimacs("p edge 3 7\ne 1 2")
        assert g.m == 1
        assert any("mismatch" in r.message for r in caplog.records)

    def test_missing_p_line(self):
        with pytest.raises(ParseError, match="missing 'p edge'"):
            parse_dimacs("c only a comment\n")
        with pytest.raises(ParseError, match="before 'p'"):
            parse_dimacs("e 1 2\n")

    def test_out_of_range_endpoint_with_line_number(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_dimacs("p edge 3 1\ne 1 9")

    def test_non_integer_tokens(self):
        with pytest.raises(ParseError):
            parse_dimacs("p edge x 1\ne 1 2")
        with pytest.raises(ParseError):
            parse_dimacs("p edge 3 1\ne 1 two")

    def test_trailing_garbage_rejected(self):
        with pytest.raises(ParseError, match="unknown line type"):
            parse_dimacs("p edge 2 1\ne 1 2\nblah blah")

    def test_edge_order_insensitive(self):
        a = parse_dimacs("p edge 4 3\ne 1 2\ne 2 3\ne 3 4")
        b = parse_dimacs("p edge 4 3\ne 3 4\ne 1 2\ne 2 3")
        assert a == b


class TestWeightRule:
    @pytest.mark.parametrize(
        "u,v,expected", [(1, 2, 4), (99, 100, 200), (100, 150, 51), (1, 199, 1)]
    )
    def test_rule_values(self, u, v, expected):
        assert rule_weight(u, v) == expected

    def test_apply_rule_rewrites_every_edge(self):
        g = WeightedGraph(4, [(1, 2, 0), (2, 3, 0), (1, 4, 99)])
        weighted = apply_weight_rule(g)
        assert weighted.weight(1, 2) == 4
        assert weighted.weight(2, 3) == 6
        assert weighted.weight(1, 4) == 6

    def test_weights_depend_on_labels_only(self):
        # The same topology relabeled gets different weights.
        g1 = WeightedGraph(3, [(1, 2, 0)])
        g2 = WeightedGraph(3, [(2, 3, 0)])
        assert apply_weight_rule(g1).weight(1, 2) == 4
        assert apply_weight_rule(g2).weight(2, 3) == 6


class TestRoundTrip:
    def test_generated_instance(self, tmp_path):
        inst = gen_g3(2)
        spec = inst.to_spec()
        path = tmp_path / "g3_2.ewclq"
        write_instance(spec, path)
        back = read_instance(path)
        assert back == spec

    def test_ref9a_checked_in_file(self, instance_dir):
        spec = read_instance(instance_dir / "ref9a.ewclq")
        assert spec.name == "ref9a"
        assert total_edge_weight(spec.graph, {4, 5, 6}) == 13

    def test_random_instance_round_trip(self, tmp_path):
        inst = gen_random(20, 0.4, 5)
        spec = inst.to_spec()
        path = tmp_path / "r.ewclq"
        write_instance(spec, path)
        assert read_instance(path) == spec

    def test_byte_stable(self, tmp_path):
        spec = gen_random(15, 0.5, 9).to_spec()
        p1, p2 = tmp_path / "a.ewclq", tmp_path / "b.ewclq"
        write_instance(spec, p1)
        write_instance(spec, p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_plain_clq_readable(self, instance_dir):
        spec = read_instance(instance_dir / "triangle_path.clq")
        assert spec.graph.n == 5
        assert spec.graph.m == 5
        assert spec.weight_mode == "explicit-file"

    def test_weight_for_non_edge_rejected(self, tmp_path):
        path = tmp_path / "bad.ewclq"
        path.write_text("p edge 3 1\ne 1 2\nw 1 3 5\n")
        with pytest.raises(ParseError, match="non-edge"):
            read_instance(path)

    def test_trailing_garbage_rejected(self, tmp_path):
        path = tmp_path / "bad.ewclq"
        path.write_text("p edge 2 1\ne 1 2\nw 1 2 3\n###\n")
        with pytest.raises(ParseError):
            read_instance(path)


def test_instance_spec_rule_mode_consistency():
    inst = gen_random(30, 0.5, 77)
    for u, v, w in inst.graph.edges:
        assert w == rule_weight(u, v)
    assert inst.to_spec().weight_mode == "rule-mod200"
