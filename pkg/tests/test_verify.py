import pytest

from spinalquad import (
    BettiVector,
    Graph,
    IsolatedVertexError,
    check_duality_formula,
    check_thickening_identities,
    complete_graph,
    cycle_rank,
    default_rotations,
    format_quad,
    parse_quad,
    permute_rotations,
    quadrangulate,
    random_tree,
    thickening_report,
    verify_surface,
)

from helpers import mutate_quad_text, random_graph_no_isolated


def test_triangle_spine_gives_torus():
    report = verify_surface(quadrangulate(complete_graph(3)))
    assert report.ok
    assert report.comp == 1
    c = report.components[0]
    assert (c.vertices, c.edges, c.faces) == (6, 12, 6)
    assert c.euler_characteristic == 0
    assert c.orientable
    assert c.genus == 1
    assert report.hand == 1


def test_single_edge_spine_gives_sphere():
    report = verify_surface(quadrangulate(Graph(edges=[(0, 1)])))
    c = report.components[0]
    assert report.ok
    assert (c.vertices, c.edges, c.faces) == (4, 4, 2)
    assert c.euler_characteristic == 2
    assert c.genus == 0


def test_two_triangles_give_two_tori():
    spine = Graph(edges=[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    report = verify_surface(quadrangulate(spine))
    assert report.ok
    assert report.comp == 2
    assert [c.genus for c in report.components] == [1, 1]
    assert report.hand == 2


def test_trees_give_spheres():
    for seed in range(6):
        t = random_tree(2 + seed, seed)
        report = verify_surface(quadrangulate(t))
        assert report.ok
        assert report.hand == 0


def test_handles_equal_spine_cycle_rank_for_any_rotations():
    for seed in range(10):
        spine = random_graph_no_isolated(seed)
        for rot_seed in (0, 1, 2):
            rot = permute_rotations(default_rotations(spine), rot_seed)
            report = verify_surface(quadrangulate(spine, rot))
            assert report.ok
            assert report.hand == cycle_rank(spine)


@pytest.mark.parametrize("action", ["delete", "duplicate", "twinflip"])
def test_mutations_flip_a_verdict(action):
    text = format_quad(quadrangulate(complete_graph(3)))
    assert verify_surface(parse_quad(text)).ok
    mutated = mutate_quad_text(text, action)
    assert not verify_surface(parse_quad(mutated)).ok


def test_unverified_component_reports_no_genus():
    text = format_quad(quadrangulate(complete_graph(3)))
    report = verify_surface(parse_quad(mutate_quad_text(text, "delete")))
    assert report.components[0].genus is None
    assert report.hand is None


@pytest.mark.parametrize(
    "spine, expected",
    [
        (Graph(edges=[(0, 1)]), (1, 0)),
        (complete_graph(4), (1, 3)),
        (Graph(edges=[(0, 1), (1, 2), (0, 2), (3, 4)]), (2, 1)),
    ],
)
def test_thickening_report_counts(spine, expected):
    assert thickening_report(spine) == expected


def test_thickening_refuses_isolated_vertices():
    with pytest.raises(IsolatedVertexError):
        thickening_report(Graph(vertices=[9], edges=[(0, 1)]))


def test_identity_check_on_fixtures():
    report = check_thickening_identities(complete_graph(4))
    assert report.ok
    assert (report.comp, report.hand) == (1, 3)
    assert report.betti == BettiVector(1, 3, 0)
    for seed in range(5):
        assert check_thickening_identities(random_tree(5, seed)).ok


def test_duality_check_on_fixtures():
    report = check_duality_formula(complete_graph(4))
    assert report.ok
    assert report.surface_betti == BettiVector(1, 6, 1)
    assert check_duality_formula(Graph(edges=[(0, 1)])).surface_betti == BettiVector(1, 0, 1)
    two_triangles = Graph(edges=[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert check_duality_formula(two_triangles).surface_betti == BettiVector(2, 4, 2)


def test_both_checks_pass_on_random_graphs():
    for seed in range(30):
        spine = random_graph_no_isolated(seed)
        assert check_thickening_identities(spine).ok
        assert check_duality_formula(spine).ok
