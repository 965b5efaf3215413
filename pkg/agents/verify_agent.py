import time
from typing import Any, Dict, List, Optional

# Import project modules
from algebra.cluster import (
    Seed,
    f_polynomial,
    den_vector,
    g_vector,
    green_sequence_report,
    initial_seed,
    seed_path,
    separation_reconstruct,
    seed_structure_check,
)
from algebra.exceptions import PolynomialError, SeedError
from algebra.quiver import quiver_of
from config.corpus import get_corpus_entry, get_prime_corpus_entries
from config.settings import MAX_WORKERS
from diagrams.exceptions import DiagramError
from diagrams.io import load_diagram
from diagrams.model import LinkDiagram, classify_segments
from diagrams.sites import find_bigons, find_triangles, primality_scan
from invariants.alexander import (
    alexander_matrices,
    alexander_matrix,
    coefficient_list,
    eval_y_minus1,
    is_palindromic,
    specialize,
)
from invariants.exceptions import LatticeError
from invariants.kauffman import (
    dim_symmetry_check,
    f_of_T,
    lattice_polynomial,
    opposite_sense,
    poset_dims,
    poset_of,
    support_rule,
)
from invariants.newton import newton_vertex_check
from planner.exceptions import PlanningError
from planner.mutation_planner import (
    MutationPlan,
    RD3Event,
    execute,
    flatten,
    load_replay,
    plan,
    quiver_duality,
    rd3_relation,
    replay,
    replay_events,
    sigma_of,
)
from utils.fixture_validator import resolve_source
from utils.logger import KnotClusterLogger
from utils.parallel_runner import run_parallel
from utils.report_generator import VerifyReport

# Initialize logger
logger = KnotClusterLogger("verify-agent")

METHODS = ("cluster", "lattice", "matrix")


def _ms(start_time: float) -> int:
    return int((time.time() - start_time) * 1000)


def validate_diagram(d: LinkDiagram, report: Optional[VerifyReport] = None) -> VerifyReport:
    """
    Structural checks: face census, primality, bigon and triangle counts

    Args:
        d: loaded diagram (loading already enforced the map invariants)
        report: report to extend (optional)

    Returns:
        VerifyReport
    """
    report = report or VerifyReport(d.name, d.n, len(d.components))
    census = d.region_census()
    total = sum((4 - sides) * count for sides, count in census.items())
    report.add("region_census", total == 8, f"sum (4-i)a_i = {total}, census {census}")

    start_time = time.time()
    violations = primality_scan(d)
    witness = ""
    if violations:
        v = violations[0]
        witness = f"regions {v.regions} share segments {v.segments}, splitting crossings {v.sides}"
    report.add("prime", not violations, witness, _ms(start_time))
    report.info["bigons"] = len(find_bigons(d))
    report.info["triangles"] = len({s.region for s in find_triangles(d)})
    report.info["census"] = census
    return report


def alexander_by_method(d: LinkDiagram, method: str, sense: Optional[str] = None):
    """
    Normalized Alexander polynomial through one pipeline

    Args:
        d: diagram
        method: 'cluster', 'lattice' or 'matrix'
        sense: lattice orientation override (optional)
    """
    label = d.labels[0]
    if method == "matrix":
        return alexander_matrix(d, label)
    if method == "lattice":
        return specialize(f_of_T(d, label, sense), classify_segments(d))
    if method == "cluster":
        seed = execute(d, plan(d))
        return specialize(f_polynomial(seed, label), classify_segments(d))
    raise ValueError(f"Unknown method: {method}")


def _check_plan(d: LinkDiagram, p: MutationPlan, report: VerifyReport) -> List[LinkDiagram]:
    reductions = len(p.reductions)
    report.add("plan_reductions", reductions == d.n - 2, f"{reductions} reductions for {d.n} crossings")

    sigma = sigma_of(p)
    involution = all(sigma[sigma[k]] == k for k in sigma)
    report.add("sigma_involution", involution, str(sigma))

    # consecutive triangle moves share no crossing
    diagrams = replay_events(d, p)
    admissible = True
    witness = ""
    last = frozenset()
    for before, event in zip(diagrams, p.events):
        if not isinstance(event, RD3Event):
            last = frozenset()
            continue
        site = next(
            s for s in find_triangles(before)
            if (s.a, s.b, s.c) == (event.a, event.b, event.c)
        )
        if site.crossings & last:
            admissible = False
            witness = f"triangle {site.segments} touches the previous one"
        last = site.crossings
    report.info["rd3_moves"] = len(p.rd3_moves)
    report.add("rd3_admissible", admissible, witness)
    report.add("ends_at_hopf", diagrams[-1].n == 2, f"{diagrams[-1].n} crossings left")
    return diagrams


def _check_rd3_relation(d: LinkDiagram, p: MutationPlan, diagrams: List[LinkDiagram], report: VerifyReport):
    """Triangle moves of the plan, and every triangle of d, against the a,b,c,a mutation"""
    step = time.time()
    # triangles whose three crossings carry nine distinct segments
    sites = [
        (d, site) for site in find_triangles(d)
        if len({label for x in site.crossings for label in d.crossings[x].segments}) == 9
    ]
    for before, event in zip(diagrams, p.events):
        if isinstance(event, RD3Event):
            sites.extend(
                (before, s) for s in find_triangles(before)
                if (s.a, s.b, s.c) == (event.a, event.b, event.c)
            )
    failing = None
    for before, site in sites:
        try:
            holds = rd3_relation(before, site)
        except DiagramError:
            # move not realizable on this map
            continue
        if not holds:
            failing = site
            break
    witness = ""
    if failing:
        site = failing
        witness = f"moving {site.a} across {site.b},{site.c} is not mutation at {site.a},{site.b},{site.c},{site.a} with {site.b} and {site.c} swapped"
    report.add("rd3_relation", failing is None, witness, _ms(step))


def verify_diagram(
    d: LinkDiagram,
    expected_alexander: Optional[List[int]] = None,
    replay_file: Optional[str] = None,
    sense: Optional[str] = None,
    report: Optional[VerifyReport] = None
) -> VerifyReport:
    """
    Run the full theorem suite on one diagram

    Args:
        d: diagram
        expected_alexander: normalized coefficient list (optional)
        replay_file: replay document to check as well (optional)
        sense: lattice orientation override (optional)
        report: report to extend (optional)

    Returns:
        VerifyReport; failed checks carry a witness
    """
    start_time = time.time()
    report = validate_diagram(d, report)
    if report.failures:
        return report

    labels = d.labels
    classes = classify_segments(d)

    # Alexander oracle and lattice specialization
    step = time.time()
    oracle = alexander_matrices(d)
    first = oracle[labels[0]]
    moving = [i for i in labels if oracle[i] != first]
    report.add("oracle_independent", not moving, f"segment {moving[0]}" if moving else "", _ms(step))
    report.add("palindromic", is_palindromic(first), first.to_text())
    if expected_alexander is not None:
        value = coefficient_list(first)
        report.add("alexander_expected", value == expected_alexander, f"{value} != {expected_alexander}")

    step = time.time()
    try:
        posets = {i: poset_of(d, i, sense) for i in labels}
    except LatticeError as e:
        report.add("state_lattice", False, str(e), _ms(step))
        return report
    report.add("state_lattice", True, duration_ms=_ms(step))
    lattice = {i: lattice_polynomial(posets[i]) for i in labels}
    dims = {i: poset_dims(posets[i]) for i in labels}

    step = time.time()
    bad = [i for i in labels if specialize(lattice[i], classes) != oracle[i]]
    witness = ""
    if bad:
        i = bad[0]
        witness = f"segment {i}: {specialize(lattice[i], classes).to_text()} vs {oracle[i].to_text()}"
    report.add("oracle_equivalence", not bad, witness, _ms(step))

    symmetry = dim_symmetry_check(d, sense, dims)
    witness = ""
    if symmetry["symmetry_violations"]:
        i, j, a, b = symmetry["symmetry_violations"][0]
        witness = f"dim T({i})_{j} = {a} but dim T({j})_{i} = {b}"
    report.add("dim_symmetry", not symmetry["symmetry_violations"], witness, symmetry["duration_ms"])
    report.add(
        "dim_column_sums",
        not symmetry["column_sum_violations"],
        str(symmetry["column_sum_violations"][:1]),
    )

    wrong_support = [
        i for i in labels
        if {j for j, v in dims[i].items() if v} != support_rule(d, i)
    ]
    report.add("dim_support", not wrong_support, f"segment {wrong_support[:1]}")

    step = time.time()
    failing = None
    for i in labels:
        points = []
        if not newton_vertex_check(lattice[i], points):
            failing = (i, points)
            break
    witness = f"F_T({failing[0]}) non-vertices {failing[1]}" if failing else ""
    report.add("newton_vertices", failing is None, witness, _ms(step))

    # Plan and knot cluster
    step = time.time()
    try:
        p = plan(d)
    except PlanningError as e:
        report.add("plan", False, str(e), _ms(step))
        return report
    report.add("plan", True, duration_ms=_ms(step))
    diagrams = _check_plan(d, p, report)
    _check_rd3_relation(d, p, diagrams, report)

    step = time.time()
    try:
        seeds = seed_path(initial_seed(quiver_of(d)), flatten(p))
    except (PolynomialError, SeedError) as e:
        report.add("laurent_exact", False, str(e), _ms(step))
        return report
    report.add("laurent_exact", True, duration_ms=_ms(step))
    final = seeds[-1]
    sigma = sigma_of(p)

    structure = [(k, v) for k, s in enumerate(seeds) for v in seed_structure_check(s)]
    report.add("seed_structure", not structure, f"step {structure[0][0]}: {structure[0][1]}" if structure else "")
    report.add("quiver_duality", quiver_duality(d, final, sigma), "sigma(Q) != opposite(Q_t)")

    mismatch = [i for i in labels if f_polynomial(final, i) != lattice[sigma[i]]]
    witness = ""
    if mismatch:
        i = mismatch[0]
        witness = (
            f"position {i}: cluster {f_polynomial(final, i).to_text()} "
            f"vs lattice T({sigma[i]}) {lattice[sigma[i]].to_text()}; "
            f"orientation {sense or 'configured'} may be reversed, try {opposite_sense(sense) if sense else 'the other sense'}"
        )
    report.add("lattice_orientation", not mismatch, witness)

    off = [i for i in labels if specialize(f_polynomial(final, i), classes) != first]
    report.add("cluster_alexander", not off, f"position {off[:1]}")

    step = time.time()
    initial = quiver_of(d)
    wrong = []
    for i in labels:
        try:
            rebuilt = separation_reconstruct(f_polynomial(final, i), g_vector(final, i), initial)
        except (PolynomialError, SeedError) as e:
            wrong.append((i, str(e)))
            continue
        if rebuilt != final.variable(i):
            wrong.append((i, rebuilt.to_text()))
    witness = f"position {wrong[0][0]}: x^g F(yhat) gives {wrong[0][1]}" if wrong else ""
    report.add("separation", not wrong, witness, _ms(step))

    bad_den = []
    for i in labels:
        den = den_vector(final, i)
        support = {j for j, v in zip(final.labels, den) if v}
        if any(v not in (0, 1) for v in den) or support != support_rule(d, sigma[i]):
            bad_den.append((i, den))
    report.add("denominators", not bad_den, str(bad_den[:1]))

    wanted = {1} if len(d.components) == 1 else {0}
    values = {i: abs(eval_y_minus1(f_polynomial(final, i))) for i in labels}
    off = [i for i, v in values.items() if v not in wanted]
    report.add("y_minus_one", not off, f"position {off[:1]}: {[values[i] for i in off[:1]]}")

    if replay_file:
        _check_replay(d, replay_file, report, {tuple(flatten(p)): final})

    logger.info(
        f"Verified {d.name}: {len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed",
        extra={"operation": "verify_diagram", "diagram": d.name, "duration_ms": _ms(start_time)}
    )
    return report


def _check_replay(
    d: LinkDiagram,
    replay_file: str,
    report: VerifyReport,
    known: Optional[Dict[tuple, Seed]] = None
):
    step = time.time()
    doc = load_replay(replay_file)
    seed = (known or {}).get(tuple(doc.sequence))
    result = replay(d, doc.sequence, doc.expected, seed)
    report.add("replay", result.ok, "; ".join(result.mismatches[:2]), _ms(step))
    all_green, ends_red = green_sequence_report(quiver_of(d), doc.sequence)
    report.info["replay_all_green"] = all_green
    report.info["replay_ends_red"] = ends_red
    if doc.expected.all_green is not None:
        report.add(
            "replay_green",
            all_green == doc.expected.all_green,
            f"all mutations green is {all_green}, expected {doc.expected.all_green}",
        )


def verify_corpus_entry(entry_id: str, sense: Optional[str] = None) -> VerifyReport:
    """Load and verify one corpus entry"""
    entry = get_corpus_entry(entry_id)
    if not entry:
        raise KeyError(f"Unknown corpus entry: {entry_id}")
    d = load_diagram(resolve_source(entry["source"]))
    report = VerifyReport(entry["name"], d.n, len(d.components))
    if len(d.components) != entry["components"]:
        report.add("components", False, f"{len(d.components)} != {entry['components']}")
    try:
        return verify_diagram(d, entry["alexander"], entry["replay"], sense, report)
    except DiagramError as e:
        report.add("diagram", False, str(e))
        return report


def verify_corpus(
    entry_ids: Optional[List[str]] = None,
    sense: Optional[str] = None,
    max_workers: int = MAX_WORKERS
) -> List[VerifyReport]:
    """
    Verify corpus entries in parallel

    Args:
        entry_ids: entries to run, all prime entries by default
        sense: lattice orientation override (optional)
        max_workers: Maximum number of parallel workers

    Returns:
        Reports in entry order
    """
    ids = entry_ids or list(get_prime_corpus_entries())
    return run_parallel(
        lambda entry_id: verify_corpus_entry(entry_id, sense),
        ids,
        max_workers=max_workers,
        label="corpus verifications",
    )


def corpus_summary(reports: List[VerifyReport]) -> Dict[str, Any]:
    return {
        "diagrams": len(reports),
        "passed": sum(1 for r in reports if r.passed),
        "failed": [r.diagram for r in reports if not r.passed],
    }
