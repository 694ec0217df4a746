from ninfty import (Pipeline, TransferSystem, all_transfers_text, data_sheet,
                    data_sheet_latex, edges_to_tikz, enumerate_systems,
                    load_lattice, sage_poset, subgroup_dictionary)

from datafiles import data_file

C4_SHEET = """\
G=C4
#Transfer Systems=5
Complexity=2
Generation Statistics={1,3,1}
#Saturated Transfer Systems=4
Cosaturated Complexity=2
#Cosaturated Transfer Systems=4
Saturated Complexity=2
Width=2
#Flat transfers=4
#Premodel structures=13
#Composition closed structures=12
#Quillen structures=10
#Weak equivalence types=4
#Compatible pairs=12
"""

S3_TRANSFERS = [
    set(),
    {(0, 4)},
    {(0, 1), (0, 2), (0, 3)},
    {(0, 1), (0, 2), (0, 3), (4, 5)},
    {(0, 1), (0, 2), (0, 4), (0, 3)},
    {(0, 1), (0, 2), (0, 4), (0, 3), (0, 5)},
    {(0, 1), (0, 2), (0, 4), (0, 3), (0, 5), (4, 5)},
    {(0, 1), (0, 2), (0, 4), (0, 3), (0, 5), (1, 5), (2, 5), (3, 5)},
    {(0, 1), (0, 2), (0, 4), (0, 3), (0, 5), (1, 5), (2, 5), (4, 5), (3, 5)},
]


def test_c4_data_sheet_golden(c4):
    assert data_sheet(c4) == C4_SHEET


def test_trivial_group_data_sheet():
    lat = load_lattice(data_file("trivial"))
    sheet = data_sheet(lat)
    assert "#Transfer Systems=1" in sheet
    assert "Complexity=0" in sheet
    assert "Width=0" in sheet


def test_data_sheet_latex_c4(c4):
    text = data_sheet_latex(c4)
    assert text.startswith("\\begin{tabular}{|cc|}")
    assert "$G = C_{4}$" in text
    assert r"\multicolumn{1}{|c|}{\#Transfer systems} & 5\\ \hline" in text
    assert r"\multicolumn{1}{|c|}{Generation values} & \{1,3,1\}\\ \hline" in text
    assert text.rstrip().endswith("\\end{tabular}")


def test_dictionary_s3(s3):
    assert subgroup_dictionary(s3) == (
        "{0:1}\n{1:C2(1)}\n{2:C2(2)}\n{3:C2(3)}\n{4:C3}\n{5:S3}\n\n"
        "Conjugacy Classes:\n[0]\n[1,2,3]\n[4]\n[5]\n")


def test_dictionary_dedekind_has_no_class_block(c4):
    text = subgroup_dictionary(c4)
    assert "Conjugacy Classes" not in text
    assert text.splitlines() == ["{0:1}", "{1:C2}", "{2:C4}"]


def test_all_transfers_s3_matches_listing(s3_store):
    lines = all_transfers_text(s3_store).splitlines()
    assert lines[0] == "{}"
    got = []
    for line in lines:
        body = line.strip("{}")
        pairs = set()
        if body:
            for chunk in body.replace("),(", ");(").split(";"):
                a, b = chunk.strip("()").split(",")
                pairs.add((int(a), int(b)))
        got.append(pairs)
    assert sorted(map(sorted, got)) == sorted(map(sorted, S3_TRANSFERS))


def test_sage_poset_transfer_c2(c2):
    store = enumerate_systems(c2)
    assert sage_poset(store, "TRANSFER") == "Poset({0:[1,],1:[],})"


def test_sage_poset_transfer_c4_is_pentagon(c4_store):
    assert sage_poset(c4_store, "TRANSFER") == \
        "Poset({0:[1,3,],1:[2,],2:[4,],3:[4,],4:[],})"


def test_sage_poset_cclosed_and_quillen_c4(c4_store):
    assert sage_poset(c4_store, "CCLOSED") == \
        "Poset({0:[1,2,3,],1:[4,],2:[4,],3:[4,],4:[],})"
    assert sage_poset(c4_store, "QUILLEN") == \
        "Poset({0:[2,3,],1:[4,],2:[],3:[4,],4:[],})"


def test_tikz_q8_example():
    q8 = load_lattice(data_file("Q8"))
    t = TransferSystem.from_pairs(
        q8, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (4, 5)])
    text = edges_to_tikz(t.mask, q8)
    lines = text.splitlines()
    assert lines[0].startswith("% requires:")
    assert r"\node[inner sep=0cm] (3) at (3.88,1.76) {$C_4$};" in lines
    faint = [l for l in lines if l.startswith(r"\draw[faint")]
    accent = [l for l in lines if l.startswith(r"\draw[accent")]
    assert faint == [
        r"\draw[faint,->] (0) edge (1);",
        r"\draw[faint,->] (0) edge[bend right] (2);",
        r"\draw[faint,->] (0) edge (3);",
        r"\draw[faint,->] (0) edge (4);",
        r"\draw[faint,->] (0) edge[bend left] (5);",
        r"\draw[faint,->] (3) edge (5);",
    ]
    assert accent == [
        r"\draw[accent,->] (1) edge (2);",
        r"\draw[accent,->] (1) edge (3);",
        r"\draw[accent,->] (1) edge (4);",
        r"\draw[accent,->] (1) edge[bend left] (5);",
        r"\draw[accent,->] (2) edge (5);",
        r"\draw[accent,->] (4) edge (5);",
    ]


def test_tikz_circle_layout(c4):
    text = edges_to_tikz(0, c4)
    assert r"\node[inner sep=0cm] (0) at (0.0000,3.0000) {$1$};" in text
    assert text.count("faint") >= 3
    assert r"\draw[accent" not in text


def test_tikz_quotient_collapses_conjugates(s3):
    # the S3 orbit edge (0,1) lands on one accent arrow in the 4-class poset
    k = s3.edge_index[(0, 1)]
    text = edges_to_tikz({k}, s3)
    accent = [l for l in text.splitlines() if "accent" in l and "draw" in l]
    assert len(accent) == 1


def test_pipeline_caches_stores(c4):
    p = Pipeline(c4)
    assert p.store("all") is p.store("all")
    assert p.scan is p.scan


def test_data_sheet_deterministic_across_workers(c4):
    assert data_sheet(c4, workers=3) == C4_SHEET
