#!/usr/bin/env python3
"""Regenerates the shipped lexicon, sample corpus and evaluation fixtures.

Run from the repository root:  python3 tools/fixtures/generate_fixtures.py

Outputs are deterministic. The annotation fixtures are integer Likert
distributions constructed so that plain arithmetic means land on the target
group means; the Wilcoxon fixtures are the paired accuracy columns of the
subset-20 fixtures.
"""

import hashlib
import itertools
import json
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
from guidelines import EXTENDED, FACTS, LEXICON, PHARMGKB  # noqa: E402

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))
MAX_CHUNK_TOKENS = 512
TIMESTAMP = "2025-01-15T00:00:00Z"
ANNOTATOR = "annotator-1"
REMOTE_MODEL = "gpt-4o-mini"


def out(path):
    full = os.path.join(ROOT, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    return full


def dump_line(obj):
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def write_jsonl(path, records):
    with open(out(path), "w", encoding="utf-8", newline="\n") as f:
        for r in records:
            f.write(dump_line(r) + "\n")


def write_json(path, obj):
    with open(out(path), "w", encoding="utf-8", newline="\n") as f:
        json.dump(obj, f, ensure_ascii=False, indent=2)
        f.write("\n")


# --- lexicon -----------------------------------------------------------------

def lexicon():
    return [{"guideline_key": k, "title": t, "genes": g, "drugs": d} for k, t, g, d in LEXICON]


# --- sample corpus -----------------------------------------------------------

EXTRA_SECTIONS = [
    "Evidence summary. The association between {gene} and {drug} response is supported by pharmacokinetic studies, "
    "observational cohorts and clinical trial subanalyses. The strength of evidence differs between phenotype groups, "
    "and the strongest evidence concerns patients with two no function or decreased function alleles. Smaller studies "
    "in other groups are consistent in direction but less precise.",
    "Allele frequencies. Frequencies of actionable {gene} alleles vary substantially across biogeographic groups. "
    "Laboratories should report the tested alleles so that clinicians understand which variants could be missed. "
    "A result reported as normal may still carry a rare variant that was not part of the tested panel.",
    "Pediatric considerations. Data in children are more limited than in adults. When {drug} is used in pediatric "
    "patients the same phenotype assignments apply, but developmental changes in drug metabolism and body weight "
    "should be considered together with the {gene} result before the dose is chosen.",
    "Drug interactions. Concomitant medications can convert a genotypic normal metabolizer into a phenotypic poor "
    "metabolizer. Strong inhibitors or inducers of the relevant pathway should be reviewed whenever {drug} is "
    "prescribed, because phenoconversion can change the recommendation derived from the {gene} genotype.",
    "Implementation in practice. Pre-emptive {gene} testing allows results to be available when {drug} is first "
    "considered. Clinical decision support can present the recommendation at order entry, and the phenotype should be "
    "documented in the problem list or laboratory section of the electronic health record.",
    "Limitations. Recommendations address the genetic component of variability only. Age, organ function, "
    "comorbidities and adherence also affect the response to {drug}, and clinical judgment is required to integrate "
    "the {gene} result with these factors.",
    "Genotyping methods. Targeted genotyping panels, sequencing and copy number assays are all used to test {gene}. "
    "Each method has blind spots, such as structural variants, hybrid alleles or rare single nucleotide variants, and the "
    "report should state which method was used so that the {drug} recommendation can be weighed accordingly.",
    "Phenotype terminology. Standardized terms such as ultrarapid, rapid, normal, intermediate and poor metabolizer, or "
    "increased, normal, decreased and poor function, make {gene} results portable between laboratories and health "
    "systems. Consistent terminology also lets decision support rules for {drug} be shared across institutions.",
    "Documentation and review. Recommendations for {drug} are periodically updated as new evidence appears. Institutions "
    "should review their {gene} decision support content after every guideline update and record the version that was "
    "applied to each prescribing decision so that later audits can reconstruct the advice that was given.",
    "Patient communication. Patients should be told what the {gene} result means for {drug} and for other medicines "
    "metabolized by the same pathway, and encouraged to share the result with every prescriber and pharmacist.",
]


def document(key):
    doc_id, drug, gene, bg, pheno, rec, alt, mon = FACTS[key]
    title = next(t for k, t, _, _ in LEXICON if k == key)
    genes = next(g for k, _, g, _ in LEXICON if k == key)
    drugs = next(d for k, _, _, d in LEXICON if k == key)
    paragraphs = [
        f"{title}: synthetic guideline summary.",
        f"Background. {bg}",
        f"Genotype and phenotype. {pheno}",
        f"Therapeutic recommendation. {rec}",
        f"Alternatives and adjustments. {alt}",
        f"Monitoring. {mon}",
    ]
    if key in EXTENDED:
        paragraphs += [s.format(gene=gene, drug=drug) for s in EXTRA_SECTIONS]
    return {
        "doc_id": doc_id,
        "source": "CPIC",
        "guideline_key": key,
        "title": f"CPIC sample: {title}",
        "body": "\n\n".join(paragraphs),
        "drugs": drugs,
        "genes": genes,
    }


def pack(body, budget):
    """Greedy paragraph packing; mirrors the documented chunking rule."""
    paras = [p.strip() for p in body.split("\n\n") if p.strip()]
    chunks, cur, cur_tokens = [], [], 0
    for p in paras:
        t = len(p.split())
        if t > budget:
            if cur:
                chunks.append(cur)
            chunks.append([p])
            cur, cur_tokens = [], 0
            continue
        if cur and cur_tokens + t > budget:
            chunks.append(cur)
            cur, cur_tokens = [], 0
        cur.append(p)
        cur_tokens += t
    if cur:
        chunks.append(cur)
    return chunks


def corpus():
    cpic = [document(k) for k, _, _, _ in LEXICON]
    pgkb = [
        {"doc_id": i, "source": "PharmGKB", "guideline_key": k, "title": t, "body": b, "drugs": d, "genes": g}
        for i, k, t, d, g, b in PHARMGKB
    ]
    return cpic, pgkb


# --- dataset -----------------------------------------------------------------

QUERY_TEMPLATES = [
    ("Provider", "What does the guideline recommend for {drug} in a patient with an actionable {gene} genotype?"),
    ("Provider", "How should {drug} dosing change based on {gene} test results?"),
    ("Provider", "Which {gene} phenotypes require an alternative to {drug}?"),
    ("Provider", "What is the clinical evidence linking {gene} variants to {drug} response?"),
    ("Provider", "A patient starting {drug} has a {gene} result on file. What monitoring is advised?"),
    ("Provider", "Are there {gene} genotypes for which {drug} should be avoided entirely?"),
    ("Provider", "How should a prescriber interpret an indeterminate {gene} result before prescribing {drug}?"),
    ("Provider", "What alternative therapies are suggested when {gene} status argues against {drug}?"),
    ("AdultPatient", "My genetic test shows a {gene} variant. Is {drug} safe for me?"),
    ("PediatricPatient", "My child was prescribed {drug} and has a {gene} test result. What should we ask the doctor?"),
]


def dataset():
    records = []
    for key, _, _, _ in LEXICON:
        _, drug, gene, *_ = FACTS[key]
        for n, (aud, tmpl) in enumerate(QUERY_TEMPLATES, start=1):
            records.append({
                "query_id": f"{key}-{n:02d}",
                "guideline_key": key,
                "audience": aud,
                "text": tmpl.format(drug=drug, gene=gene),
            })
    return records


# --- annotations -------------------------------------------------------------

def annotation(qid, group, acc, rel, comp, clar, tp=None, fp=None, fn=None):
    rec = {
        "response_ref": {"query_id": qid, "group": group},
        "accuracy": acc, "relevance": rel, "completeness": comp, "clarity": clar,
        "annotator_id": ANNOTATOR, "timestamp": TIMESTAMP,
    }
    if tp is not None:
        rec["tp"] = tp
    if fp is not None:
        rec["fp"] = fp
    if fn is not None:
        rec["fn"] = fn
    return rec


def phase1_260(ds):
    # accuracy: 234 fives + 26 fours -> 4.90; completeness: 208 + 52 -> 4.80;
    # recall: 234 x 1.0 + 26 x 0.9 -> 0.99; relevance and clarity all fives.
    recs = []
    for i, q in enumerate(ds):
        acc = 4 if i % 10 == 3 else 5
        comp = 4 if i % 10 in (3, 7) else 5
        tp, fn = (9, 1) if i % 10 == 5 else (5, 0)
        fp = None
        if q["guideline_key"] == "ifnl3-peginterferon":
            fp = 1 if i % 10 in (0, 2, 4, 8) else 0
        recs.append(annotation(q["query_id"], "phase1", acc, 5, comp, 5, tp, fp, fn))
    return recs


SUBSET_KEYS = [k for k, _, _, _ in LEXICON][:20]

# Per-query rows: (phase1_acc, phase2_acc, gpt_acc)
ACCURACY_ROWS = [
    (5, 4, 5), (5, 4, 5), (5, 4, 5),          # q1-q3: phase2 - phase1 = -1, gpt - phase2 = +1
    (4, 5, 4), (4, 5, 4),                     # q4-q5
    (4, 5, 3),                                # q6
    (3, 5, 2), (3, 5, 2),                     # q7-q8
    (5, 5, 2),                                # q9
    (5, 5, 5), (5, 5, 5), (5, 5, 5), (5, 5, 5), (5, 5, 5), (5, 5, 5),  # q10-q15
    (4, 4, 5),                                # q16
    (4, 4, 3), (4, 4, 3),                     # q17-q18
    (4, 4, 1),                                # q19
    (4, 4, 4),                                # q20
]


def subset20():
    qids = [f"{k}-01" for k in SUBSET_KEYS]
    groups = {"phase1": [], "phase2": [], "gpt4omini": []}
    for i, qid in enumerate(qids):
        a1, a2, ag = ACCURACY_ROWS[i]
        # completeness: phase1 16x5 + 4x4 = 4.8; phase2 all 5; gpt 8x5 + 8x4 + 4x3 = 4.2
        c1 = 4 if i in (2, 6, 11, 17) else 5
        cg = 5 if i < 8 else (4 if i < 16 else 3)
        # clarity: gpt 18x5 + 2x4 = 4.9
        lg = 4 if i in (4, 13) else 5
        # recall: phase1 14 x 1.0 + 6 x 0.9 = 0.97; phase2 18 + 2 x 0.9 = 0.99; gpt 10 + 10 x 0.7 = 0.85
        r1 = (9, 1) if i in (1, 4, 7, 10, 13, 16) else (5, 0)
        r2 = (9, 1) if i in (3, 15) else (5, 0)
        rg = (7, 3) if i % 2 == 1 else (6, 0)
        groups["phase1"].append(annotation(qid, "phase1", a1, 5, c1, 5, r1[0], None, r1[1]))
        groups["phase2"].append(annotation(qid, "phase2", a2, 5, 5, 5, r2[0], None, r2[1]))
        groups["gpt4omini"].append(annotation(qid, "gpt4omini", ag, 5, cg, lg, rg[0], None, rg[1]))
    return groups


def brute_wilcoxon_lower(pairs):
    """W- (sum of ranks of negative b-a) and exact P(W- <= observed) by 2^n enumeration."""
    d = [b - a for a, b in pairs if b - a != 0]
    absd = sorted(abs(x) for x in d)
    rank_of = {}
    i = 0
    while i < len(absd):
        j = i
        while j < len(absd) and absd[j] == absd[i]:
            j += 1
        rank_of[absd[i]] = (i + 1 + j) / 2
        i = j
    ranks = [rank_of[abs(x)] for x in d]
    w_minus = sum(r for r, x in zip(ranks, d) if x < 0)
    hits = 0
    for signs in itertools.product((0, 1), repeat=len(d)):
        if sum(r for r, s in zip(ranks, signs) if s) <= w_minus + 1e-9:
            hits += 1
    return w_minus, len(d), hits / 2 ** len(d)


def wilcoxon_fixture(groups, a, b):
    pa = [r["accuracy"] for r in groups[a]]
    pb = [r["accuracy"] for r in groups[b]]
    pairs = list(zip(pa, pb))
    w, n_eff, p = brute_wilcoxon_lower(pairs)
    return {
        "a_group": a,
        "b_group": b,
        "metric": "accuracy",
        "alternative": "greater",
        "query_ids": [r["response_ref"]["query_id"] for r in groups[a]],
        "pairs": [[x, y] for x, y in pairs],
        "expected": {"w_statistic": w, "n_effective": n_eff, "p_value": p, "significant_at_0_05": p < 0.05},
    }


# --- quiz --------------------------------------------------------------------

QUIZ_STEMS = [
    ("clopidogrel", "CYP2C19", "A CYP2C19 poor metabolizer needs antiplatelet therapy after stent placement. Best choice?",
     ["Clopidogrel 75 mg daily", "Prasugrel or ticagrelor", "Clopidogrel 150 mg daily", "Aspirin alone", "No therapy"], {1}),
    ("warfarin", "VKORC1", "A patient with VKORC1 AA and CYP2C9 *3/*3 is starting warfarin. Expected dose requirement?",
     ["Much higher than average", "Average", "Much lower than average", "Cannot use warfarin", "Unaffected by genotype"], {2}),
    ("codeine", "CYP2D6", "A child who is a CYP2D6 ultrarapid metabolizer needs post-tonsillectomy analgesia. Recommendation?",
     ["Codeine at standard dose", "Codeine at double dose", "Tramadol", "Avoid codeine and tramadol; use a non-tramadol alternative", "Oxycodone only"], {3}),
    ("abacavir", "HLA-B", "An HLA-B*57:01 positive patient with HIV. Use of abacavir?",
     ["Start at half dose", "Start at full dose", "Do not use abacavir", "Use with antihistamine cover", "Use after desensitization"], {2}),
    ("allopurinol", "HLA-B", "An HLA-B*58:01 carrier with gout. Urate lowering choice?",
     ["Allopurinol 100 mg", "Allopurinol 300 mg", "Allopurinol with steroids", "Febuxostat or alternative", "No therapy ever"], {3}),
    ("fluorouracil", "DPYD", "A DPYD activity score 1 patient is prescribed fluorouracil. Starting dose?",
     ["Full dose", "50 percent of standard dose", "25 percent increase", "Avoid all chemotherapy", "10 percent of dose"], {1}),
    ("azathioprine", "TPMT", "A TPMT intermediate metabolizer with inflammatory bowel disease starts azathioprine. Dose?",
     ["30 to 80 percent of normal dose", "Normal dose", "Double dose", "Reduced dose per local protocol", "Avoid all immunosuppression"], {0, 3}),
    ("simvastatin", "SLCO1B1", "An SLCO1B1 poor function patient needs a statin. Recommendation?",
     ["Simvastatin 80 mg", "Simvastatin 40 mg", "Avoid simvastatin; choose an alternative statin", "No statin ever", "Simvastatin 20 mg every other day"], {2}),
    ("tacrolimus", "CYP3A5", "A CYP3A5 normal metabolizer after kidney transplant. Tacrolimus start?",
     ["Standard dose", "1.5 to 2 times standard dose", "Half dose", "Avoid tacrolimus", "Weekly dosing"], {1}),
    ("omeprazole", "CYP2C19", "A CYP2C19 ultrarapid metabolizer with erosive esophagitis. Omeprazole start?",
     ["Reduce by 50 percent", "Standard dose", "Increase by 100 percent", "Avoid all PPIs", "Every other day"], {2}),
    ("voriconazole", "CYP2C19", "A CYP2C19 ultrarapid metabolizer needs antifungal prophylaxis. Choice?",
     ["Voriconazole standard dose", "Voriconazole double dose", "Alternative agent not dependent on CYP2C19", "No prophylaxis", "Voriconazole half dose"], {2}),
    ("carbamazepine", "HLA-B", "An HLA-B*15:02 positive carbamazepine-naive patient with epilepsy. Recommendation?",
     ["Carbamazepine standard dose", "Oxcarbazepine", "Do not use carbamazepine; avoid oxcarbazepine", "Carbamazepine low dose", "Carbamazepine with monitoring"], {2}),
    ("tamoxifen", "CYP2D6", "A postmenopausal CYP2D6 poor metabolizer with ER-positive breast cancer. Best endocrine option?",
     ["Tamoxifen 20 mg", "Aromatase inhibitor", "Tamoxifen plus paroxetine", "No endocrine therapy", "Tamoxifen 10 mg"], {1}),
    ("ondansetron", "CYP2D6", "A CYP2D6 ultrarapid metabolizer needs antiemetic prophylaxis. Choice?",
     ["Ondansetron higher dose", "Granisetron", "Dolasetron", "Tropisetron", "Palonosetron"], {1}),
    ("atazanavir", "UGT1A1", "A UGT1A1 *28/*28 patient worried about jaundice. Atazanavir?",
     ["Recommended without comment", "Consider alternative agent", "Double dose", "Contraindicated in all", "Half dose"], {1}),
    ("efavirenz", "CYP2B6", "A CYP2B6 poor metabolizer starting efavirenz. Dose consideration?",
     ["800 mg daily", "600 mg daily only", "Consider 400 or 200 mg daily", "Avoid all antiretrovirals", "1200 mg daily"], {2}),
    ("gentamicin", "MT-RNR1", "An MT-RNR1 m.1555A>G carrier with a mild infection. Aminoglycoside use?",
     ["Gentamicin standard dose", "Avoid aminoglycosides unless no alternative", "Gentamicin double dose", "Tobramycin instead", "Amikacin instead"], {1}),
    ("sevoflurane", "RYR1", "A patient with a pathogenic RYR1 variant needs general anesthesia. Choice?",
     ["Sevoflurane", "Succinylcholine induction", "Total intravenous anesthesia", "Desflurane", "Isoflurane"], {2}),
    ("rasburicase", "G6PD", "A G6PD deficient patient with tumor lysis syndrome. Rasburicase?",
     ["Standard dose", "Half dose", "Contraindicated", "Double dose", "Use with methylene blue"], {2}),
    ("sertraline", "CYP2C19", "A CYP2C19 poor metabolizer starting sertraline. Starting dose?",
     ["Double dose", "Standard dose", "Consider 50 percent lower starting dose", "Avoid all antidepressants", "Weekly dosing"], {2}),
]


def quiz():
    items = []
    for n, (_, _, stem, choices, correct) in enumerate(QUIZ_STEMS, start=1):
        items.append({"item_id": f"q{n:02d}", "stem": stem, "choices": choices, "correct": sorted(correct)})
    return items


def quiz_answers(items, wrong_ids, multi_pick):
    ans = {}
    for it in items:
        correct = it["correct"]
        if it["item_id"] in wrong_ids:
            ans[it["item_id"]] = next(c for c in range(5) if c not in correct)
        elif len(correct) > 1:
            ans[it["item_id"]] = multi_pick
        else:
            ans[it["item_id"]] = correct[0]
    return ans


# --- cassette ----------------------------------------------------------------

IVACAFTOR_QUESTION = (
    "A 16-year-old Caucasian male with CF presents with compound heterozygosity for F508del and G551D CFTR "
    "mutations. How would you determine the appropriate dose of ivacaftor for this patient, considering their "
    "unique genetic profile?"
)

IVACAFTOR_SUMMARIES = [
    "Source: cpic-ivacaftor. Ivacaftor is recommended for cystic fibrosis patients aged 6 years and older who have at least one G551D-CFTR variant.",
    "Source: cpic-ivacaftor. Patients with compound heterozygous F508del and G551D genotypes respond to ivacaftor.",
    "Source: pgkb-ivacaftor-label. The labeled dose for patients aged 6 years and older is 150 mg every 12 hours.",
    "Source: ema-ivacaftor. Prescription should be made by a physician experienced in the treatment of cystic fibrosis.",
]


def request_hash(model, system, user):
    payload = "\x1e".join([model, "0", system, user])
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def render(text, bindings):
    for k, v in bindings.items():
        text = text.replace("{" + k + "}", v)
    return text


def cassette():
    tdir = os.path.join(ROOT, "templates")
    system = open(os.path.join(tdir, "layer2_system.txt"), encoding="utf-8").read()
    user_t = open(os.path.join(tdir, "layer2_user.txt"), encoding="utf-8").read()
    numbered = "\n\n".join(f"{i}. {s}" for i, s in enumerate(IVACAFTOR_SUMMARIES, start=1))
    user = render(user_t, {"user_input": IVACAFTOR_QUESTION, "all_summaries": numbered})
    response = open(os.path.join(ROOT, "fixtures", "cassettes", "ivacaftor_response.txt"), encoding="utf-8").read()
    return [{"request_hash": request_hash(REMOTE_MODEL, system, user), "response_text": response}], user


GOLDEN_CONTENT = (
    "Ivacaftor is recommended for cystic fibrosis patients aged 6 years and older who have at least one "
    "G551D-CFTR variant.\nPatients with compound heterozygous F508del and G551D genotypes respond to ivacaftor."
)


def golden():
    """Renders each template with plain str.replace; the C++ renderer must match byte-for-byte."""
    tdir = os.path.join(ROOT, "templates")
    t = {n: open(os.path.join(tdir, n + ".txt"), encoding="utf-8").read()
         for n in ("layer1_system", "layer1_user", "layer2_system", "layer2_user")}
    l1 = {"source": "cpic-ivacaftor", "query": IVACAFTOR_QUESTION, "content": GOLDEN_CONTENT}
    numbered = "\n\n".join(f"{i}. {s}" for i, s in enumerate(IVACAFTOR_SUMMARIES, start=1))
    l2 = {"user_input": IVACAFTOR_QUESTION, "all_summaries": numbered}
    files = {
        "layer1_system.txt": t["layer1_system"],
        "layer1_user.txt": render(t["layer1_user"], l1),
        "layer2_system.txt": t["layer2_system"],
        "layer2_user.txt": render(t["layer2_user"], l2),
    }
    inputs = {"layer1": l1, "layer2": {"user_input": IVACAFTOR_QUESTION, "summaries": IVACAFTOR_SUMMARIES}}
    return files, inputs


def main():
    write_json("lexicon/cpic26.json", lexicon())

    cpic, pgkb = corpus()
    write_jsonl("corpus/cpic_sample.jsonl", cpic)
    write_jsonl("corpus/pharmgkb_sample.jsonl", pgkb)
    n_chunks = sum(len(pack(d["body"], MAX_CHUNK_TOKENS)) for d in cpic)
    n_chunks_all = n_chunks + sum(len(pack(d["body"], MAX_CHUNK_TOKENS)) for d in pgkb)
    write_json("corpus/expected_counts.json", {
        "max_chunk_tokens": MAX_CHUNK_TOKENS,
        "cpic_documents": len(cpic),
        "cpic_chunks": n_chunks,
        "pharmgkb_documents": len(pgkb),
        "all_chunks": n_chunks_all,
    })

    ds = dataset()
    write_jsonl("fixtures/dataset_260.jsonl", ds)
    write_jsonl("fixtures/phase1_260.jsonl", phase1_260(ds))
    groups = subset20()
    for g, recs in groups.items():
        write_jsonl(f"fixtures/subset20_{g}.jsonl", recs)
    write_json("fixtures/wilcoxon_p1p2.json", wilcoxon_fixture(groups, "phase1", "phase2"))
    write_json("fixtures/wilcoxon_p2gpt.json", wilcoxon_fixture(groups, "gpt4omini", "phase2"))

    items = quiz()
    write_json("fixtures/quiz/quiz20.json", items)
    write_json("fixtures/quiz/answers_sherpa_phase3.json", quiz_answers(items, {"q05", "q12"}, 3))
    write_json("fixtures/quiz/answers_claude37.json", quiz_answers(items, {"q02", "q09", "q16"}, 0))
    write_json("fixtures/quiz/answers_gemini20.json", quiz_answers(items, {"q02", "q05", "q09", "q16"}, 0))
    write_json("fixtures/quiz/answers_gpt4omini.json",
               quiz_answers(items, {"q02", "q05", "q09", "q12", "q16", "q18"}, 3))

    cas, _ = cassette()
    write_jsonl("fixtures/cassettes/ivacaftor_layer2.jsonl", cas)
    write_json("fixtures/cassettes/ivacaftor_layer2_inputs.json",
               {"model": REMOTE_MODEL, "query": IVACAFTOR_QUESTION, "summaries": IVACAFTOR_SUMMARIES})

    files, inputs = golden()
    os.makedirs(out("fixtures/golden"), exist_ok=True)
    for name, text in files.items():
        with open(out(f"fixtures/golden/{name}"), "w", encoding="utf-8", newline="") as f:
            f.write(text)
    write_json("fixtures/golden/inputs.json", inputs)

    print(f"cpic docs={len(cpic)} chunks={n_chunks} all_chunks={n_chunks_all}")
    for name in ("wilcoxon_p1p2", "wilcoxon_p2gpt"):
        print(name, json.load(open(out(f"fixtures/{name}.json")))["expected"])


if __name__ == "__main__":
    main()
