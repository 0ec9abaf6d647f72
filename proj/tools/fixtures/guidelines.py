"""Guideline lexicon rows and synthetic sample-corpus facts.

The sample text is written for software testing. It paraphrases commonly
published pharmacogenomic concepts at a high level and is NOT clinical
guidance.
"""

# (guideline_key, title, genes, drugs)
LEXICON = [
    ("cyp2b6-efavirenz", "CYP2B6 and efavirenz", ["CYP2B6"], ["efavirenz"]),
    ("cyp2c19-clopidogrel", "CYP2C19 and clopidogrel", ["CYP2C19"], ["clopidogrel"]),
    ("cyp2c19-ppi", "CYP2C19 and proton pump inhibitors", ["CYP2C19"],
     ["dexlansoprazole", "lansoprazole", "omeprazole", "pantoprazole", "proton pump inhibitors"]),
    ("cyp2c19-voriconazole", "CYP2C19 and voriconazole", ["CYP2C19"], ["voriconazole"]),
    ("cyp2c9-nsaids", "CYP2C9 and nonsteroidal anti-inflammatory drugs (NSAIDs)", ["CYP2C9"],
     ["celecoxib", "flurbiprofen", "ibuprofen", "lornoxicam", "meloxicam", "nsaids", "piroxicam",
      "tenoxicam"]),
    ("cyp2c9-hlab-phenytoin", "CYP2C9 and HLA-B and phenytoin", ["CYP2C9", "HLA-B"],
     ["fosphenytoin", "phenytoin"]),
    ("cyp2c9-vkorc1-cyp4f2-warfarin", "CYP2C9, VKORC1, CYP4F2, and warfarin",
     ["CYP2C9", "CYP4F2", "VKORC1"], ["warfarin"]),
    ("cyp2d6-atomoxetine", "CYP2D6 and atomoxetine", ["CYP2D6"], ["atomoxetine"]),
    ("cyp2d6-ondansetron-tropisetron", "CYP2D6 and ondansetron and tropisetron", ["CYP2D6"],
     ["ondansetron", "tropisetron"]),
    ("cyp2d6-tamoxifen", "CYP2D6 and tamoxifen", ["CYP2D6"], ["tamoxifen"]),
    ("cyp2d6-cyp2c19-tca", "CYP2D6, CYP2C19, and tricyclic antidepressants", ["CYP2C19", "CYP2D6"],
     ["amitriptyline", "clomipramine", "desipramine", "doxepin", "imipramine", "nortriptyline",
      "tricyclic antidepressants", "trimipramine"]),
    ("ssri-cyp2d6-cyp2c19-cyp2b6-slc6a4-htr2a",
     "Serotonin reuptake inhibitor antidepressants and CYP2D6, CYP2C19, CYP2B6, SLC6A4, and HTR2A",
     ["CYP2B6", "CYP2C19", "CYP2D6", "HTR2A", "SLC6A4"],
     ["citalopram", "escitalopram", "fluoxetine", "fluvoxamine", "paroxetine", "sertraline",
      "venlafaxine", "vortioxetine"]),
    ("opioids-cyp2d6-oprm1-comt", "Opioids and CYP2D6, OPRM1, and COMT", ["COMT", "CYP2D6", "OPRM1"],
     ["codeine", "hydrocodone", "morphine", "opioids", "oxycodone", "tramadol"]),
    ("cyp3a5-tacrolimus", "CYP3A5 and tacrolimus", ["CYP3A5"], ["tacrolimus"]),
    ("dpyd-fluoropyrimidines", "DPYD and fluoropyrimidines", ["DPYD"],
     ["capecitabine", "fluorouracil", "fluoropyrimidines"]),
    ("g6pd-deficiency", "G6PD deficiency", ["G6PD"],
     ["dapsone", "methylene blue", "primaquine", "rasburicase", "tafenoquine"]),
    ("hlaa-hlab-carbamazepine-oxcarbazepine", "HLA-A, HLA-B, and carbamazepine and oxcarbazepine",
     ["HLA-A", "HLA-B"], ["carbamazepine", "oxcarbazepine"]),
    ("hlab-abacavir", "HLA-B and abacavir", ["HLA-B"], ["abacavir"]),
    ("hlab-allopurinol", "HLA-B and allopurinol", ["HLA-B"], ["allopurinol"]),
    ("ifnl3-peginterferon", "IFNL3 and peginterferon-alpha-based regimens", ["IFNL3"],
     ["peginterferon alfa-2a", "peginterferon alfa-2b", "ribavirin"]),
    ("mtrnr1-aminoglycosides", "MT-RNR1 and aminoglycosides", ["MT-RNR1"],
     ["amikacin", "aminoglycosides", "gentamicin", "kanamycin", "plazomicin", "streptomycin",
      "tobramycin"]),
    ("ryr1-cacna1s-anesthetics",
     "RYR1, CACNA1S, and volatile anesthetic agents and succinylcholine", ["CACNA1S", "RYR1"],
     ["desflurane", "enflurane", "halothane", "isoflurane", "methoxyflurane", "sevoflurane",
      "succinylcholine"]),
    ("slco1b1-abcg2-cyp2c9-statins", "SLCO1B1, ABCG2, CYP2C9, and statins",
     ["ABCG2", "CYP2C9", "SLCO1B1"],
     ["atorvastatin", "fluvastatin", "lovastatin", "pitavastatin", "pravastatin", "rosuvastatin",
      "simvastatin", "statins"]),
    ("tpmt-nudt15-thiopurines", "TPMT, NUDT15, and thiopurines", ["NUDT15", "TPMT"],
     ["azathioprine", "mercaptopurine", "thioguanine", "thiopurines"]),
    ("ugt1a1-atazanavir", "UGT1A1 and atazanavir", ["UGT1A1"], ["atazanavir"]),
    ("cftr-ivacaftor", "CFTR and ivacaftor", ["CFTR"], ["ivacaftor"]),
]

# Per-guideline facts: (doc_id, primary drug, primary gene, background, phenotype, recommendation,
# alternatives, monitoring)
FACTS = {
    "cyp2b6-efavirenz": ("cpic-cyp2b6-efavirenz", "efavirenz", "CYP2B6",
        "Efavirenz is a non-nucleoside reverse transcriptase inhibitor cleared mainly by CYP2B6 hydroxylation.",
        "CYP2B6 poor metabolizers carry two decreased or no function alleles such as *6 and *18 and reach higher efavirenz plasma concentrations.",
        "For CYP2B6 intermediate metabolizers a reduced efavirenz dose of 400 mg per day may be considered, and poor metabolizers may start at 400 mg or 200 mg per day.",
        "When efavirenz is not tolerated an integrase inhibitor based regimen is a common alternative chosen by the HIV care team.",
        "Central nervous system adverse effects such as dizziness and vivid dreams should be monitored after efavirenz initiation."),
    "cyp2c19-clopidogrel": ("cpic-cyp2c19-clopidogrel", "clopidogrel", "CYP2C19",
        "Clopidogrel is a prodrug that requires CYP2C19 bioactivation to form the active thiol metabolite that inhibits the P2Y12 receptor.",
        "CYP2C19 poor metabolizers and intermediate metabolizers form less active metabolite and show reduced platelet inhibition on clopidogrel.",
        "For CYP2C19 poor and intermediate metabolizers with acute coronary syndrome undergoing percutaneous coronary intervention, avoid standard dose clopidogrel if possible.",
        "Prasugrel or ticagrelor at standard dose are the usual alternatives when clopidogrel should be avoided and no contraindication exists.",
        "Cardiovascular events and bleeding should be monitored, and platelet function testing may supplement CYP2C19 genotype information."),
    "cyp2c19-ppi": ("cpic-cyp2c19-ppi", "omeprazole", "CYP2C19",
        "Proton pump inhibitors such as omeprazole, lansoprazole and pantoprazole are metabolized primarily by CYP2C19.",
        "CYP2C19 ultrarapid and rapid metabolizers clear proton pump inhibitors faster and can have lower exposure and reduced acid suppression.",
        "For CYP2C19 ultrarapid metabolizers increase the starting daily dose of omeprazole or lansoprazole by 100 percent, and for normal metabolizers consider a 50 to 100 percent increase for H. pylori infection.",
        "For CYP2C19 poor metabolizers on chronic therapy beyond 12 weeks consider a 50 percent dose reduction of the proton pump inhibitor.",
        "Monitor symptom control and efficacy, especially for erosive esophagitis and Helicobacter pylori eradication therapy."),
    "cyp2c19-voriconazole": ("cpic-cyp2c19-voriconazole", "voriconazole", "CYP2C19",
        "Voriconazole is a triazole antifungal whose plasma levels depend strongly on CYP2C19 activity.",
        "CYP2C19 ultrarapid and rapid metabolizers often have subtherapeutic voriconazole trough concentrations, while poor metabolizers have higher exposure.",
        "For CYP2C19 ultrarapid and rapid metabolizers choose an alternative antifungal agent that does not depend on CYP2C19, such as isavuconazole or a liposomal amphotericin B product.",
        "For CYP2C19 poor metabolizers an alternative agent is preferred, or a lower voriconazole dose with careful therapeutic drug monitoring.",
        "Therapeutic drug monitoring of voriconazole trough levels is advised for all patients regardless of CYP2C19 genotype."),
    "cyp2c9-nsaids": ("cpic-cyp2c9-nsaids", "celecoxib", "CYP2C9",
        "Several nonsteroidal anti-inflammatory drugs including celecoxib, flurbiprofen, ibuprofen and meloxicam are CYP2C9 substrates.",
        "CYP2C9 activity score 0 or 0.5 defines poor metabolizers, and activity score 1 defines intermediate metabolizers with moderately reduced clearance.",
        "For CYP2C9 poor metabolizers initiate celecoxib, flurbiprofen or ibuprofen at 25 to 50 percent of the lowest recommended starting dose and titrate cautiously.",
        "For meloxicam in CYP2C9 poor metabolizers choose an alternative NSAID that is not metabolized by CYP2C9 or not prolonged by reduced CYP2C9 activity.",
        "Monitor blood pressure, kidney function and gastrointestinal bleeding risk during NSAID therapy."),
    "cyp2c9-hlab-phenytoin": ("cpic-cyp2c9-hlab-phenytoin", "phenytoin", "HLA-B",
        "Phenytoin is an antiseizure medication metabolized by CYP2C9, and the HLA-B*15:02 allele increases the risk of severe cutaneous reactions.",
        "HLA-B*15:02 carriers are at higher risk of Stevens-Johnson syndrome and toxic epidermal necrolysis, and CYP2C9 poor metabolizers accumulate phenytoin.",
        "If the patient is HLA-B*15:02 positive and phenytoin naive, do not use phenytoin or fosphenytoin.",
        "For HLA-B*15:02 negative CYP2C9 intermediate or poor metabolizers, consider a 25 to 50 percent lower maintenance dose of phenytoin.",
        "Phenytoin serum concentrations and signs of toxicity such as ataxia and nystagmus should be monitored after dose changes."),
    "cyp2c9-vkorc1-cyp4f2-warfarin": ("cpic-warfarin", "warfarin", "VKORC1",
        "Warfarin is a vitamin K antagonist whose dose requirement depends on CYP2C9 metabolism, VKORC1 target sensitivity and CYP4F2 vitamin K recycling.",
        "The VKORC1 -1639G>A variant increases warfarin sensitivity, CYP2C9 *2 and *3 reduce S-warfarin clearance, and CYP4F2 *3 modestly increases dose requirement.",
        "For patients of European ancestry, calculate the warfarin starting dose with a validated pharmacogenetic algorithm that includes CYP2C9 and VKORC1 genotypes.",
        "When CYP4F2 *3 is present the algorithm dose may be increased by 5 to 10 percent, and alternative anticoagulants can be considered when dosing is difficult.",
        "International normalized ratio monitoring remains essential, with closer checks during the first weeks of warfarin therapy."),
    "cyp2d6-atomoxetine": ("cpic-cyp2d6-atomoxetine", "atomoxetine", "CYP2D6",
        "Atomoxetine is a norepinephrine reuptake inhibitor for attention deficit hyperactivity disorder that is cleared by CYP2D6.",
        "CYP2D6 poor metabolizers have roughly ten-fold higher atomoxetine exposure than normal metabolizers.",
        "For CYP2D6 poor metabolizers start atomoxetine at 40 mg per day in adults or 0.5 mg/kg/day in children and increase only if symptoms persist after two weeks.",
        "If the response is inadequate and plasma concentrations are low, the atomoxetine dose may be increased with therapeutic drug monitoring.",
        "Monitor heart rate, blood pressure and adverse effects such as nausea and insomnia after dose changes."),
    "cyp2d6-ondansetron-tropisetron": ("cpic-cyp2d6-ondansetron", "ondansetron", "CYP2D6",
        "Ondansetron and tropisetron are 5-HT3 receptor antagonists used to prevent nausea and vomiting and are metabolized by CYP2D6.",
        "CYP2D6 ultrarapid metabolizers clear ondansetron quickly and have a higher rate of postoperative and chemotherapy induced vomiting.",
        "For CYP2D6 ultrarapid metabolizers select an alternative antiemetic not predominantly metabolized by CYP2D6, such as granisetron.",
        "Dolasetron, palonosetron and ramosetron are also metabolized by CYP2D6 and are not preferred alternatives for ultrarapid metabolizers.",
        "Monitor antiemetic effectiveness during chemotherapy cycles and after surgery."),
    "cyp2d6-tamoxifen": ("cpic-cyp2d6-tamoxifen", "tamoxifen", "CYP2D6",
        "Tamoxifen is converted by CYP2D6 to endoxifen, the main active metabolite for estrogen receptor positive breast cancer.",
        "CYP2D6 poor metabolizers and intermediate metabolizers have lower endoxifen concentrations and possibly a higher risk of recurrence.",
        "For CYP2D6 poor metabolizers consider hormonal therapy such as an aromatase inhibitor for postmenopausal women, or aromatase inhibitor with ovarian suppression.",
        "If aromatase inhibitor use is contraindicated, a higher tamoxifen dose of 40 mg per day may be considered for intermediate metabolizers.",
        "Avoid strong CYP2D6 inhibitors such as paroxetine and fluoxetine during tamoxifen therapy."),
    "cyp2d6-cyp2c19-tca": ("cpic-cyp2d6-cyp2c19-tca", "amitriptyline", "CYP2D6",
        "Tricyclic antidepressants such as amitriptyline and nortriptyline are metabolized by CYP2C19 demethylation and CYP2D6 hydroxylation.",
        "CYP2D6 ultrarapid metabolizers may have subtherapeutic tricyclic concentrations, while CYP2D6 or CYP2C19 poor metabolizers may accumulate drug.",
        "For CYP2D6 ultrarapid or poor metabolizers avoid tricyclic use for depression, and if a tricyclic is warranted use therapeutic drug monitoring to guide dose.",
        "For CYP2C19 ultrarapid or poor metabolizers consider an alternative drug not metabolized by CYP2C19, such as nortriptyline or desipramine.",
        "Monitor electrocardiogram findings, anticholinergic effects and plasma concentrations when higher tricyclic doses are used."),
    "ssri-cyp2d6-cyp2c19-cyp2b6-slc6a4-htr2a": ("cpic-ssri", "sertraline", "CYP2C19",
        "Serotonin reuptake inhibitor antidepressants including citalopram, escitalopram, sertraline, paroxetine and fluvoxamine depend on CYP2D6, CYP2C19 or CYP2B6 metabolism.",
        "CYP2C19 poor metabolizers have higher citalopram, escitalopram and sertraline exposure, and CYP2D6 poor metabolizers have higher paroxetine and fluvoxamine exposure.",
        "For CYP2C19 poor metabolizers consider a 50 percent reduction of the starting dose of citalopram, escitalopram or sertraline, or choose an alternative antidepressant.",
        "For CYP2C19 ultrarapid metabolizers consider an alternative not predominantly metabolized by CYP2C19; SLC6A4 and HTR2A results are not used for prescribing.",
        "Monitor for QT prolongation with citalopram and for activation, gastrointestinal effects and treatment response with all serotonin reuptake inhibitors."),
    "opioids-cyp2d6-oprm1-comt": ("cpic-opioids", "codeine", "CYP2D6",
        "Codeine and tramadol are activated by CYP2D6 to morphine and O-desmethyltramadol, which provide most of the analgesic effect.",
        "CYP2D6 ultrarapid metabolizers form more active metabolite and are at risk of toxicity, while poor metabolizers get reduced analgesia.",
        "For CYP2D6 ultrarapid and poor metabolizers avoid codeine and tramadol and use a non-tramadol, non-codeine analgesic.",
        "Morphine and nonopioid analgesics are alternatives; OPRM1 and COMT results are not recommended for opioid prescribing decisions.",
        "Monitor for respiratory depression and sedation, especially in children after tonsillectomy or adenoidectomy."),
    "cyp3a5-tacrolimus": ("cpic-cyp3a5-tacrolimus", "tacrolimus", "CYP3A5",
        "Tacrolimus is a calcineurin inhibitor used after solid organ transplantation and is metabolized by CYP3A5 and CYP3A4.",
        "CYP3A5 expressers carrying one or two *1 alleles clear tacrolimus faster and need higher doses to reach target trough concentrations.",
        "For CYP3A5 normal and intermediate metabolizers increase the tacrolimus starting dose by 1.5 to 2 times the recommended dose, not exceeding 0.3 mg/kg/day.",
        "For CYP3A5 poor metabolizers, the *3/*3 genotype, start with the standard tacrolimus dose.",
        "Therapeutic drug monitoring of tacrolimus trough levels guides further dose adjustment for every patient."),
    "dpyd-fluoropyrimidines": ("cpic-dpyd", "fluorouracil", "DPYD",
        "Fluorouracil and capecitabine are fluoropyrimidines inactivated by dihydropyrimidine dehydrogenase, the enzyme encoded by DPYD.",
        "DPYD activity score 1 or 1.5 defines intermediate metabolizers and activity score 0 or 0.5 defines poor metabolizers with high toxicity risk.",
        "For DPYD intermediate metabolizers reduce the fluoropyrimidine starting dose by 50 percent and titrate based on toxicity or drug levels.",
        "For DPYD poor metabolizers with activity score 0 avoid fluorouracil and capecitabine; with activity score 0.5 avoid or use a strongly reduced dose with monitoring.",
        "Monitor for severe neutropenia, mucositis, diarrhea and hand-foot syndrome during the first fluoropyrimidine cycles."),
    "g6pd-deficiency": ("cpic-g6pd", "rasburicase", "G6PD",
        "Glucose-6-phosphate dehydrogenase deficiency is caused by G6PD variants and predisposes red blood cells to oxidative hemolysis.",
        "G6PD deficient patients include hemizygous males and homozygous females with deficient alleles; heterozygous females have variable activity.",
        "Rasburicase is contraindicated in G6PD deficient patients, and pegloticase should likewise be avoided.",
        "Primaquine, tafenoquine, dapsone and methylene blue require G6PD testing before use, and dose or drug choice depends on the enzyme activity.",
        "Monitor hemoglobin and signs of hemolysis after exposure to oxidant drugs."),
    "hlaa-hlab-carbamazepine-oxcarbazepine": ("cpic-hla-carbamazepine", "carbamazepine", "HLA-B",
        "Carbamazepine and oxcarbazepine are aromatic antiseizure drugs associated with HLA-B*15:02 and HLA-A*31:01 hypersensitivity.",
        "HLA-B*15:02 carriers are at increased risk of Stevens-Johnson syndrome and toxic epidermal necrolysis, and HLA-A*31:01 carriers at risk of DRESS and maculopapular eruptions.",
        "If the patient is HLA-B*15:02 positive and carbamazepine naive, do not use carbamazepine; avoid oxcarbazepine as well.",
        "If the patient is HLA-A*31:01 positive and carbamazepine naive, consider an alternative agent when available.",
        "Monitor for rash and mucosal involvement during the first three months of therapy."),
    "hlab-abacavir": ("cpic-hlab-abacavir", "abacavir", "HLA-B",
        "Abacavir is a nucleoside reverse transcriptase inhibitor for HIV infection associated with a hypersensitivity reaction in HLA-B*57:01 carriers.",
        "Carriers of at least one HLA-B*57:01 allele have a high risk of abacavir hypersensitivity.",
        "Abacavir is not recommended for HLA-B*57:01 positive patients and should not be started.",
        "For HLA-B*57:01 negative patients abacavir can be used with standard dosing.",
        "Monitor for fever, rash and gastrointestinal or respiratory symptoms during the first six weeks of abacavir therapy."),
    "hlab-allopurinol": ("cpic-hlab-allopurinol", "allopurinol", "HLA-B",
        "Allopurinol is a xanthine oxidase inhibitor for gout and hyperuricemia, and the HLA-B*58:01 allele is linked to severe cutaneous adverse reactions.",
        "HLA-B*58:01 carriers have a markedly increased risk of allopurinol induced Stevens-Johnson syndrome, toxic epidermal necrolysis and DRESS.",
        "Allopurinol is contraindicated in HLA-B*58:01 positive patients.",
        "Febuxostat or other urate lowering therapy are alternatives when allopurinol should be avoided.",
        "Monitor for rash during the early months of urate lowering therapy."),
    "ifnl3-peginterferon": ("cpic-ifnl3-peginterferon", "peginterferon alfa-2a", "IFNL3",
        "Peginterferon alfa-2a and peginterferon alfa-2b combined with ribavirin were historic regimens for chronic hepatitis C genotype 1.",
        "The IFNL3 rs12979860 CC genotype is favorable, with higher sustained virologic response, while CT and TT genotypes are unfavorable; the rs8099917 TT genotype is favorable and the G allele is unfavorable.",
        "For favorable IFNL3 genotypes the response to peginterferon and ribavirin regimens is more likely, which can support shorter therapy when combined with protease inhibitors.",
        "For unfavorable IFNL3 genotypes consider interferon free direct acting antiviral regimens.",
        "Interpretation must keep rs12979860 and rs8099917 separate because favorable genotypes differ between the two polymorphisms."),
    "mtrnr1-aminoglycosides": ("cpic-mtrnr1-aminoglycosides", "gentamicin", "MT-RNR1",
        "Aminoglycoside antibiotics such as amikacin, gentamicin and tobramycin can cause irreversible hearing loss in carriers of specific MT-RNR1 variants.",
        "The mitochondrial MT-RNR1 m.1555A>G, m.1494C>T and m.1095T>C variants increase the risk of aminoglycoside induced ototoxicity.",
        "Avoid aminoglycoside antibiotics in individuals with an MT-RNR1 increased risk variant unless the infection is severe and no safe alternative exists.",
        "If no effective alternative exists, use the shortest possible course with frequent drug level checks.",
        "Monitor hearing with audiology assessment when aminoglycosides are used."),
    "ryr1-cacna1s-anesthetics": ("cpic-ryr1-cacna1s", "sevoflurane", "RYR1",
        "Potent volatile anesthetic agents such as desflurane, isoflurane and sevoflurane and the depolarizing relaxant succinylcholine can trigger malignant hyperthermia.",
        "Pathogenic RYR1 and CACNA1S variants confer malignant hyperthermia susceptibility.",
        "For malignant hyperthermia susceptible patients volatile anesthetic agents and succinylcholine are relatively contraindicated and should be avoided.",
        "Total intravenous anesthesia with nontriggering agents such as propofol is the alternative.",
        "Dantrolene should be immediately available and end tidal carbon dioxide and temperature monitored."),
    "slco1b1-abcg2-cyp2c9-statins": ("cpic-statins", "simvastatin", "SLCO1B1",
        "Statins lower cholesterol; SLCO1B1 encodes the OATP1B1 hepatic uptake transporter, ABCG2 encodes an efflux transporter and CYP2C9 metabolizes fluvastatin.",
        "SLCO1B1 decreased and poor function phenotypes raise plasma statin exposure and the risk of statin associated musculoskeletal symptoms.",
        "For SLCO1B1 poor function avoid simvastatin and prescribe an alternative statin at a dose based on the potency needed, and limit atorvastatin to 20 mg or less.",
        "For ABCG2 poor function start rosuvastatin at 10 mg or less, and for CYP2C9 poor metabolizers keep fluvastatin at 40 mg or less per day.",
        "Monitor creatine kinase when muscle symptoms appear and reassess statin choice if myopathy develops."),
    "tpmt-nudt15-thiopurines": ("cpic-thiopurines", "azathioprine", "TPMT",
        "Thiopurines including azathioprine, mercaptopurine and thioguanine are inactivated by TPMT, and NUDT15 variants reduce degradation of active metabolites.",
        "TPMT or NUDT15 intermediate metabolizers have higher active thioguanine nucleotide levels, and poor metabolizers have a high risk of life threatening myelosuppression.",
        "For TPMT or NUDT15 intermediate metabolizers start mercaptopurine or azathioprine at 30 to 80 percent of the normal dose.",
        "For poor metabolizers of nonmalignant conditions consider a non-thiopurine immunosuppressant, and for malignancy reduce the dose drastically to about 10 percent given three times weekly.",
        "Monitor blood counts frequently and allow two to four weeks to reach steady state after each dose adjustment."),
    "ugt1a1-atazanavir": ("cpic-ugt1a1-atazanavir", "atazanavir", "UGT1A1",
        "Atazanavir is an HIV protease inhibitor that inhibits UGT1A1, raising unconjugated bilirubin.",
        "UGT1A1 poor metabolizers, for example *28/*28, have a high likelihood of jaundice on atazanavir.",
        "For UGT1A1 poor metabolizers consider an alternative agent, especially when jaundice would lead to nonadherence.",
        "For normal and intermediate metabolizers there is no need to avoid atazanavir based on UGT1A1 genotype.",
        "Monitor bilirubin and discuss the cosmetic impact of jaundice with the patient."),
    "cftr-ivacaftor": ("cpic-ivacaftor", "ivacaftor", "CFTR",
        "Ivacaftor is a CFTR potentiator for cystic fibrosis that increases chloride channel opening for responsive CFTR variants.",
        "Patients with at least one G551D-CFTR variant, including compound heterozygous F508del and G551D genotypes, respond to ivacaftor.",
        "Ivacaftor is recommended for cystic fibrosis patients aged 6 years and older who have at least one G551D-CFTR variant, typically at 150 mg every 12 hours.",
        "Ivacaftor is not recommended for patients homozygous for F508del when used alone.",
        "Monitor liver enzymes and consult a physician experienced in cystic fibrosis treatment before prescribing."),
}

# Guidelines whose sample documents carry extended sections and split into two chunks.
EXTENDED = [
    "cyp2c19-clopidogrel",
    "cyp2c9-vkorc1-cyp4f2-warfarin",
    "opioids-cyp2d6-oprm1-comt",
    "ssri-cyp2d6-cyp2c19-cyp2b6-slc6a4-htr2a",
    "cyp2d6-cyp2c19-tca",
    "slco1b1-abcg2-cyp2c9-statins",
    "tpmt-nudt15-thiopurines",
    "dpyd-fluoropyrimidines",
]

# Synthetic PharmGKB-style clinical annotation documents for Phase 2 corpora.
PHARMGKB = [
    ("pgkb-ca-clopidogrel-cyp2c19", "cyp2c19-clopidogrel", "Clinical annotation: CYP2C19*2 and clopidogrel",
     ["clopidogrel"], ["CYP2C19"],
     "Level 1A clinical annotation. Patients carrying the CYP2C19*2 allele treated with clopidogrel may have increased risk of major adverse cardiovascular events and stent thrombosis compared with *1/*1 patients. The association is supported by multiple cohort studies and meta-analyses. The *3 allele is a second common no function allele in East Asian populations."),
    ("pgkb-ca-warfarin-vkorc1", "cyp2c9-vkorc1-cyp4f2-warfarin", "Clinical annotation: VKORC1 rs9923231 and warfarin",
     ["warfarin"], ["VKORC1"],
     "Level 1A clinical annotation. The A allele of VKORC1 rs9923231 is associated with decreased warfarin dose requirements. Carriers of the AA genotype typically need the lowest maintenance doses. The effect is observed across ancestries although allele frequency differs widely."),
    ("pgkb-ca-codeine-cyp2d6", "opioids-cyp2d6-oprm1-comt", "Clinical annotation: CYP2D6 ultrarapid metabolism and codeine",
     ["codeine"], ["CYP2D6"],
     "Level 1A clinical annotation. CYP2D6 gene duplications producing ultrarapid metabolism are associated with increased morphine formation from codeine and reports of life threatening respiratory depression in children. Poor metabolizers show reduced analgesic response to codeine."),
    ("pgkb-ca-simvastatin-slco1b1", "slco1b1-abcg2-cyp2c9-statins", "Clinical annotation: SLCO1B1 rs4149056 and simvastatin",
     ["simvastatin"], ["SLCO1B1"],
     "Level 1A clinical annotation. The C allele of SLCO1B1 rs4149056 is associated with increased simvastatin acid exposure and an increased risk of myopathy, particularly at the 80 mg dose. The association is weaker for rosuvastatin and pravastatin."),
    ("pgkb-ca-abacavir-hlab", "hlab-abacavir", "Clinical annotation: HLA-B*57:01 and abacavir",
     ["abacavir"], ["HLA-B"],
     "Level 1A clinical annotation. HLA-B*57:01 carriage is associated with abacavir hypersensitivity. Prospective screening removed immunologically confirmed hypersensitivity in randomized trial data."),
    ("pgkb-ca-peginterferon-ifnl3", "ifnl3-peginterferon", "Clinical annotation: IFNL3 rs12979860 and peginterferon alfa-2a",
     ["peginterferon alfa-2a", "ribavirin"], ["IFNL3"],
     "Level 1A clinical annotation. The CC genotype of IFNL3 rs12979860 is associated with higher sustained virologic response to peginterferon alfa-2a or alfa-2b with ribavirin in hepatitis C genotype 1. For rs8099917 the TT genotype is favorable and the GT and GG genotypes are unfavorable."),
    ("pgkb-ca-tacrolimus-cyp3a5", "cyp3a5-tacrolimus", "Clinical annotation: CYP3A5*3 and tacrolimus",
     ["tacrolimus"], ["CYP3A5"],
     "Level 1A clinical annotation. CYP3A5*1 carriers require higher tacrolimus doses to achieve target trough concentrations than *3/*3 homozygotes. The expresser phenotype is more frequent in individuals of African ancestry."),
    ("pgkb-ca-fluorouracil-dpyd", "dpyd-fluoropyrimidines", "Clinical annotation: DPYD*2A and fluorouracil",
     ["capecitabine", "fluorouracil"], ["DPYD"],
     "Level 1A clinical annotation. The DPYD*2A splice variant c.1905+1G>A is associated with severe and fatal toxicity from fluorouracil and capecitabine. Genotype guided dose reduction lowered toxicity in prospective studies."),
]
