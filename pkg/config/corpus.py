"""
Corpus of diagrams the verification suite runs on
"""

CORPUS = {
    # Fixtures
    "hopf": {
        "name": "Hopf link",
        "category": "fixture",
        "source": "hopf.json",
        "components": 2,
        "alexander": [1, -1],
        "replay": None
    },

    "trefoil": {
        "name": "Trefoil",
        "category": "fixture",
        "source": "trefoil.pd",
        "components": 1,
        "alexander": [1, -1, 1],
        "replay": None
    },

    "figure_eight": {
        "name": "Figure-eight knot",
        "category": "fixture",
        "source": "figure_eight.json",
        "components": 1,
        "alexander": [1, -3, 1],
        "replay": "figure_eight.replay.json"
    },

    "borromean": {
        "name": "Borromean rings",
        "category": "fixture",
        "source": "borromean.json",
        "components": 3,
        "alexander": [1, -4, 6, -4, 1],
        "replay": "borromean.replay.json"
    },

    "knot2112": {
        "name": "Knot [2,1,1,2]",
        "category": "fixture",
        "source": "knot2112.json",
        "components": 1,
        "alexander": [1, -3, 5, -3, 1],
        "replay": "knot2112.replay.json"
    },

    # Generated 2-bridge diagrams
    "gen_2": {
        "name": "2-bridge [2]",
        "category": "generated",
        "source": "gen:2",
        "components": 2,
        "alexander": [1, -1],
        "replay": None
    },

    "gen_3": {
        "name": "2-bridge [3]",
        "category": "generated",
        "source": "gen:3",
        "components": 1,
        "alexander": [1, -1, 1],
        "replay": None
    },

    # Parallel and antiparallel orientations differ; only agreement is checked
    "gen_4": {
        "name": "2-bridge [4]",
        "category": "generated",
        "source": "gen:4",
        "components": 2,
        "alexander": None,
        "replay": None
    },

    "gen_5": {
        "name": "2-bridge [5]",
        "category": "generated",
        "source": "gen:5",
        "components": 1,
        "alexander": [1, -1, 1, -1, 1],
        "replay": None
    },

    "gen_2_2": {
        "name": "2-bridge [2,2]",
        "category": "generated",
        "source": "gen:2,2",
        "components": 1,
        "alexander": [1, -3, 1],
        "replay": None
    },

    "gen_2_1_1_2": {
        "name": "2-bridge [2,1,1,2]",
        "category": "generated",
        "source": "gen:2,1,1,2",
        "components": 1,
        "alexander": [1, -3, 5, -3, 1],
        "replay": None
    },

    # Connected sums, rejected by validation and planning
    "granny": {
        "name": "Granny knot",
        "category": "non_prime",
        "source": "granny.pd",
        "components": 1,
        "alexander": [1, -2, 3, -2, 1],
        "replay": None
    },
}


def get_corpus_entry(entry_id):
    """Get corpus entry by ID"""
    return CORPUS.get(entry_id.lower().replace(" ", "_").replace("-", "_"))


def get_all_corpus_entries():
    """Get all corpus entries"""
    return CORPUS


def get_corpus_entries_by_kind(kind):
    """Get corpus entries by category (fixture, generated or non_prime)"""
    return {k: v for k, v in CORPUS.items() if v["category"] == kind}


def get_prime_corpus_entries():
    """Entries the full theorem suite runs on"""
    return {k: v for k, v in CORPUS.items() if v["category"] != "non_prime"}
