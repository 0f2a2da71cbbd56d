#!/usr/bin/env python3
# Copyright 2026 The Rarelex Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the synthetic fixture set in this directory.

Outputs lexicon.jsonl, corpus_plan.tsv, mednli.jsonl and medsts.jsonl. The
1M-token corpus itself is expanded from corpus_plan.tsv by the C++ generator
(tests/support/corpus_generator.cc) so it never has to be checked in.

Rerunning this script reproduces the files byte for byte.
"""

import json
import os
import random
import re

HERE = os.path.dirname(os.path.abspath(__file__))
TOTAL_TOKENS = 1_000_000

# Rare medical words with a single plain-English gloss. All selected at the
# fixture threshold (50).
SELECTED = [
    ("dyspnea", "difficulty breathing"),
    ("tachycardia", "rapid heart rate"),
    ("bradycardia", "slow heart rate"),
    ("hematuria", "blood in the urine"),
    ("pyrexia", "fever"),
    ("syncope", "temporary loss of consciousness"),
    ("edema", "swelling caused by fluid"),
    ("pruritus", "itching of the skin"),
    ("emesis", "vomiting"),
    ("cephalalgia", "headache"),
    ("myalgia", "muscle pain"),
    ("arthralgia", "joint pain"),
    ("epistaxis", "nosebleed"),
    ("hypotension", "low blood pressure"),
    ("hypertension", "high blood pressure"),
    ("hyperglycemia", "high blood sugar"),
    ("hypoglycemia", "low blood sugar"),
    ("diaphoresis", "heavy sweating"),
    ("dysphagia", "difficulty swallowing"),
    ("dysuria", "painful urination"),
    ("polyuria", "frequent urination"),
    ("anorexia", "loss of appetite"),
    ("malaise", "general feeling of discomfort"),
    ("vertigo", "sensation of spinning"),
    ("tinnitus", "ringing in the ears"),
    ("alopecia", "hair loss"),
    ("erythema", "redness of the skin"),
    ("cyanosis", "bluish skin color"),
    ("jaundice", "yellow skin color"),
    ("pallor", "pale skin color"),
    ("orthopnea", "difficulty breathing when lying flat"),
    ("hemoptysis", "coughing up blood"),
    ("hematemesis", "vomiting blood"),
    ("melena", "black stool"),
    ("nocturia", "urination at night"),
    ("oliguria", "low urine output"),
    ("anuria", "no urine output"),
    ("rhinorrhea", "runny nose"),
    ("otalgia", "ear pain"),
    ("odynophagia", "painful swallowing"),
    ("dysarthria", "slurred speech"),
    ("aphasia", "loss of speech"),
    ("ataxia", "loss of balance"),
    ("paresthesia", "tingling of the skin"),
    ("somnolence", "strong desire to sleep"),
    ("insomnia", "inability to sleep"),
    ("xerostomia", "dry mouth"),
    ("halitosis", "bad breath"),
    ("dyspepsia", "indigestion"),
    ("flatulence", "gas in the bowel"),
    ("constipation", "difficulty passing stool"),
    ("diarrhea", "loose stool"),
    ("hepatomegaly", "enlarged liver"),
    ("splenomegaly", "enlarged spleen"),
    ("cardiomegaly", "enlarged heart"),
    ("lymphadenopathy", "swollen lymph nodes"),
    ("thrombocytopenia", "low platelet count"),
    ("leukocytosis", "high white blood cell count"),
    ("anemia", "low red blood cell count"),
    ("hyponatremia", "low blood sodium"),
    ("hyperkalemia", "high blood potassium"),
    ("hypokalemia", "low blood potassium"),
    ("azotemia", "high blood urea"),
    ("tachypnea", "rapid breathing"),
    ("bradypnea", "slow breathing"),
    ("apnea", "pause in breathing"),
    ("hypoxia", "low oxygen level"),
    ("hypothermia", "low body temperature"),
    ("hyperthermia", "high body temperature"),
    ("photophobia", "sensitivity to light"),
    ("diplopia", "double vision"),
    ("myopia", "nearsightedness"),
    ("presbyopia", "age related loss of near vision"),
    ("dysmenorrhea", "painful menstruation"),
    ("amenorrhea", "absence of menstruation"),
    ("cholelithiasis", "gallstones"),
    ("nephrolithiasis", "kidney stones"),
    ("cellulitis", "skin infection"),
    ("pneumothorax", "collapsed lung"),
    ("atelectasis", "partial collapse of the lung"),
]

# Abbreviations; the first two are frequent in the corpus and still selected
# through the abbreviation rule.
ABBREVIATIONS = [
    ("BP", "blood pressure", {"tags": ["medicine", "abbreviation"]}),
    ("HR", "heart rate", {"tags": ["medicine", "abbreviation"]}),
    ("CHF", "congestive heart failure", {"tags": ["medicine", "initialism"]}),
    ("COPD", "chronic lung disease", {"tags": ["medicine", "acronym"]}),
    ("MI", "heart attack", {"tags": ["medicine"], "abbrev": True}),
    ("HTN", "high blood pressure", {"tags": ["medicine"]}),
    ("CKD", "chronic kidney disease", {"tags": ["medicine", "abbreviation"]}),
    ("ESRD", "end stage kidney disease", {"tags": ["medicine", "abbreviation"]}),
    ("SOB", "shortness of breath", {"tags": ["medicine"], "abbrev": True}),
    ("ECG", "heart rhythm test", {"tags": ["medicine", "abbreviation"]}),
    ("UTI", "urinary tract infection", {"tags": ["medicine", "abbreviation"]}),
    ("DVT", "blood clot in a deep vein", {"tags": ["medicine", "abbreviation"]}),
    ("PE", "blood clot in the lung", {"tags": ["medicine", "abbreviation"]}),
    ("GERD", "acid reflux disease", {"tags": ["medicine", "abbreviation"]}),
    ("TIA", "brief stroke", {"tags": ["medicine", "abbreviation"]}),
    ("AKI", "sudden kidney injury", {"tags": ["medicine", "abbreviation"]}),
]

# Medical, rare, but more than one distinct gloss after normalization.
MULTI_GLOSS = [
    ("angina", ["chest pain", "tightness in the chest"]),
    ("ascites", ["fluid in the belly", "swelling of the belly"]),
    ("sepsis", ["blood infection", "body response to infection"]),
    ("stenosis", ["narrowing of a vessel", "narrowing of a passage"]),
    ("fibrosis", ["scarring of tissue", "thickening of tissue"]),
    ("ischemia", ["low blood flow", "lack of oxygen to tissue"]),
    ("neuropathy", ["nerve damage", "nerve disease"]),
    ("colitis", ["swelling of the colon", "bowel disease"]),
    ("gastritis", ["swelling of the stomach", "stomach upset"]),
    ("hepatitis", ["liver disease", "swelling of the liver"]),
    ("nephritis", ["kidney disease", "swelling of the kidney"]),
    ("arrhythmia", ["irregular heart rate", "heart rhythm problem"]),
    ("embolism", ["blocked vessel", "clot in a vessel"]),
    ("aneurysm", ["bulging vessel", "weak vessel wall"]),
    ("stomatitis", ["mouth sores", "swelling of the mouth"]),
    ("glossitis", ["swollen tongue", "tongue pain"]),
    ("keratitis", ["eye infection", "swelling of the eye"]),
    ("otitis", ["ear infection", "ear pain"]),
    ("rhinitis", ["runny nose", "nasal swelling"]),
    ("sinusitis", ["sinus infection", "sinus pain"]),
]

# Medical, rare, one gloss, but the gloss leans on another rare word.
RARE_GLOSS = [
    ("hemolysis", "rupture of erythrocytes"),
    ("steatorrhea", "stool with excess lipids"),
    ("hyperlipidemia", "excess lipids in the blood"),
    ("azoospermia", "absence of spermatozoa"),
    ("cholestasis", "reduced flow of bile"),
    ("proteinuria", "albumin in the urine"),
    ("lipoma", "benign adipose growth"),
    ("hydronephrosis", "swelling of a kidney from urine buildup"),
    ("dactylitis", "swelling of a digit"),
    ("onychomycosis", "fungal nail infection"),
    ("blepharitis", "swelling of the eyelid margins"),
    ("cheilitis", "swelling of the vermilion"),
]

# Medical and single-gloss, but frequent enough not to be rare.
COMMON_MEDICAL = [
    ("fever", "high body temperature"),
    ("cough", "sudden release of air from the lungs"),
    ("pain", "physical discomfort"),
    ("nausea", "feeling of sickness"),
    ("fatigue", "tiredness"),
    ("infection", "invasion by germs"),
    ("stroke", "brain attack"),
    ("diabetes", "high blood sugar disease"),
    ("asthma", "airway disease"),
    ("cancer", "malignant growth"),
    ("fracture", "broken bone"),
    ("rash", "skin outbreak"),
]

# Multi-word headwords; they can never match a single corpus token.
MULTI_WORD = [
    ("heart attack", "blocked blood flow to the heart"),
    ("blood pressure", "force of blood on vessel walls"),
    ("kidney stone", "hard deposit in the kidney"),
    ("sore throat", "pain in the throat"),
    ("chest pain", "pain in the chest"),
    ("shortness of breath", "difficulty breathing"),
    ("low back pain", "pain in the lower back"),
    ("high fever", "very high body temperature"),
]

# Everyday words with non-medical tags.
NON_MEDICAL = [
    ("anchor", "a heavy object that holds a ship", ["nautical"]),
    ("sonnet", "a poem of fourteen lines", ["poetry", "literature"]),
    ("quasar", "a distant bright galaxy core", ["astronomy"]),
    ("gavotte", "an old french dance", ["music", "dance"]),
    ("kayak", "a small narrow boat", ["nautical", "sports"]),
    ("trowel", "a small garden tool", ["gardening"]),
    ("lintel", "a beam over a door", ["architecture"]),
    ("oboe", "a woodwind instrument", ["music"]),
    ("saffron", "a yellow spice", ["cooking"]),
    ("ledger", "a book of accounts", ["finance"]),
    ("tundra", "a cold treeless plain", ["geography"]),
    ("basalt", "a dark volcanic rock", ["geology"]),
    ("falcon", "a fast bird of prey", ["zoology"]),
    ("mortise", "a hole cut for a joint", ["carpentry"]),
    ("sextant", "a tool for navigation", ["nautical"]),
    ("haiku", "a short poem", ["poetry"]),
    ("zither", "a flat stringed instrument", ["music"]),
    ("gneiss", "a banded rock", ["geology"]),
    ("plinth", "a base for a statue", ["architecture"]),
    ("ferret", "a small hunting animal", ["zoology"]),
    ("bodice", "the upper part of a dress", ["clothing"]),
    ("cravat", "a neck scarf", ["clothing"]),
    ("tiller", "a lever for steering a boat", ["nautical"]),
    ("loom", "a machine for weaving", ["textiles"]),
    ("kiln", "an oven for pottery", ["crafts"]),
    ("scone", "a small baked cake", ["cooking"]),
    ("fjord", "a narrow sea inlet", ["geography"]),
    ("lute", "a plucked string instrument", ["music"]),
    ("dirge", "a song for the dead", ["music"]),
    ("pylon", "a tall tower for power lines", ["engineering"]),
    ("cobalt", "a hard metal", ["chemistry"]),
    ("atrium", "an open central hall", ["architecture"]),
]

# Rare medical words that turn into selected entries only after gloss
# normalization (markup, duplicate glosses, empty glosses).
NORMALIZED = [
    ("petechiae", ["[[small|small]] red spots on the skin."], ["medical"]),
    ("rhonchi", ["coarse [[lung]] sounds", "coarse  lung sounds."],
     ["medicine"]),
    ("stridor", ["high pitched breathing sound", "", "  "], ["medical"]),
    ("crepitus", ["crackling under the skin", "crackling under the skin"],
     ["medicine"]),
    ("clubbing", ["[[rounded|rounded]] finger tips"], ["symptom"]),
    ("anosmia", ["loss of smell."], ["symptom"]),
    ("ageusia", ["loss of taste"], ["symptom", "medical"]),
    ("bruxism", ["teeth grinding"], ["dentistry", "medical"]),
    ("enuresis", ["bed wetting"], ["pediatrics", "medicine"]),
    ("hirsutism", ["excess body hair"], ["dermatology", "disease"]),
    ("pica", ["eating things that are not food"], ["psychiatry", "disorder",
                                                    "medicine"]),
    ("scabies", ["itchy skin mite infestation"], ["parasitic disease"]),
]

# Words from NON_MEDICAL glosses and other filler; frequent.
FUNCTION_WORDS = """
the of and a in to is was for with on as by at from that this be are or it an
his her their not but which had has have were no he she they we patient
patients reports denies presents history showed shows noted no new left right
""".split()

RARE_GLOSS_WORDS = ["erythrocytes", "lipids", "spermatozoa", "bile", "albumin",
                    "adipose", "buildup", "digit", "fungal", "margins",
                    "vermilion"]


def tokens(text):
    return [t.lower() for t in re.findall(r"[A-Za-z0-9]+(?:['-][A-Za-z0-9]+)*",
                                          text)]


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for row in rows:
            f.write(json.dumps(row, ensure_ascii=False) + "\n")


def build_lexicon():
    rows = []
    for word, gloss in SELECTED:
        rows.append({"word": word, "glosses": [gloss],
                     "tags": ["medical"]})
    for word, gloss, extra in ABBREVIATIONS:
        row = {"word": word, "glosses": [gloss], "tags": extra["tags"]}
        if extra.get("abbrev"):
            row["abbrev"] = True
        rows.append(row)
    for word, glosses in MULTI_GLOSS:
        rows.append({"word": word, "glosses": glosses, "tags": ["disease"]})
    for word, gloss in RARE_GLOSS:
        rows.append({"word": word, "glosses": [gloss], "tags": ["medicine"]})
    for word, gloss in COMMON_MEDICAL:
        rows.append({"word": word, "glosses": [gloss], "tags": ["medical"]})
    for word, gloss in MULTI_WORD:
        rows.append({"word": word, "glosses": [gloss], "tags": ["medical"]})
    for word, gloss, tags in NON_MEDICAL:
        rows.append({"word": word, "glosses": [gloss], "tags": tags})
    for word, glosses, tags in NORMALIZED:
        rows.append({"word": word, "glosses": glosses, "tags": tags})
    # A second CHF line repeating the same sense; merged on load.
    rows.append({"word": "CHF", "glosses": ["congestive heart failure"],
                 "tags": ["medicine"]})
    # Pharmacology tags count as medical through the "pharma" substring.
    pharma = [("analgesic", "pain reliever"), ("antipyretic", "fever reducer"),
              ("diuretic", "water pill"), ("anticoagulant", "blood thinner"),
              ("antiemetic", "drug against vomiting"),
              ("antihistamine", "allergy drug"),
              ("laxative", "drug that eases stool"),
              ("sedative", "calming drug")]
    for word, gloss in pharma:
        rows.append({"word": word, "glosses": [gloss],
                     "tags": ["pharmacology"]})
    assert len({r["word"] for r in rows}) == 200, len(rows)
    return rows


def build_plan(lexicon):
    rng = random.Random(20260101)
    counts = {}
    headwords = set()
    rare_heads = set(w for w, _ in SELECTED) | set(w for w, _ in MULTI_GLOSS)
    rare_heads |= set(w for w, _ in RARE_GLOSS)
    rare_heads |= set(w for w, _, _ in NORMALIZED)
    rare_heads |= {"analgesic", "antipyretic", "diuretic", "anticoagulant",
                   "antiemetic", "antihistamine", "laxative", "sedative"}
    rare_heads |= set(w for w, _, _ in NON_MEDICAL)
    for row in lexicon:
        headwords.add(row["word"].lower())
    for w in sorted(rare_heads):
        counts[w] = rng.randint(1, 49)
    # Abbreviations: a few frequent, the rest rare.
    for word, _, _ in ABBREVIATIONS:
        counts[word.lower()] = rng.randint(2, 40)
    counts["bp"] = 6500
    counts["hr"] = 4200
    for w in RARE_GLOSS_WORDS:
        counts[w] = rng.randint(1, 30)
    # Every other gloss word is frequent. Some land inside the sweep grid.
    gloss_words = set()
    for row in lexicon:
        for g in row["glosses"]:
            gloss_words.update(tokens(g))
    gloss_words -= set(RARE_GLOSS_WORDS)
    for w in sorted(gloss_words):
        if w in counts:
            continue
        counts[w] = rng.choice([rng.randint(60, 900), rng.randint(900, 2500)])
    # A handful of gloss words inside the 20k-200k sweep grid.
    for w, c in [("blood", 52000), ("heart", 31000), ("skin", 24000),
                 ("low", 43000), ("high", 38000), ("loss", 21000),
                 ("swelling", 27000), ("rate", 64000)]:
        counts[w] = c
    for w, _ in COMMON_MEDICAL:
        counts[w] = rng.randint(300, 5000)
    for phrase, _ in MULTI_WORD:
        for w in tokens(phrase):
            counts.setdefault(w, rng.randint(500, 3000))
    for w in FUNCTION_WORDS:
        if w not in counts:
            counts[w] = rng.randint(800, 3000)
    # Filler vocabulary to give the tail some body.
    for i in range(1000):
        counts["filler%04d" % i] = rng.randint(1, 300)
    counts["the"] = 0
    rest = TOTAL_TOKENS - sum(counts.values())
    assert rest > 0, rest
    counts["the"] = rest
    assert sum(counts.values()) == TOTAL_TOKENS
    rows = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    with open(os.path.join(HERE, "corpus_plan.tsv"), "w", encoding="utf-8",
              newline="\n") as f:
        f.write("#total\t%d\n" % TOTAL_TOKENS)
        for w, c in rows:
            f.write("%s\t%d\n" % (w, c))


NLI_TEMPLATES = {
    "entailment": [
        ("The patient has {w}.", "The patient reports {g}."),
        ("On exam there was {w}.", "Exam showed {g}."),
        ("History of {w} noted on admission.", "The patient has a history of {g}."),
    ],
    "contradiction": [
        ("The patient has {w}.", "The patient denies {g}."),
        ("There was no {w} on exam.", "Exam showed {g}."),
        ("The patient reports {w}.", "No {g} was noted."),
    ],
    "neutral": [
        ("The patient has {w}.", "The patient was admitted last week."),
        ("The patient was seen for {w}.", "The family history is unknown."),
        ("Follow up for {w} was arranged.", "The patient lives alone."),
    ],
}


def build_mednli():
    rng = random.Random(7)
    pairs = ([(w, g) for w, g in SELECTED] +
             [(w, g) for w, g, _ in ABBREVIATIONS])
    rows = []
    labels = ["entailment", "contradiction", "neutral"]
    for i in range(200):
        label = labels[i % 3]
        w, g = pairs[rng.randrange(len(pairs))]
        s1, s2 = rng.choice(NLI_TEMPLATES[label])
        split = "train" if i < 100 else ("dev" if i < 150 else "test")
        rows.append({"id": "nli-%03d" % i, "sentence1": s1.format(w=w, g=g),
                     "sentence2": s2.format(w=w, g=g), "label": label,
                     "split": split})
    write_jsonl(os.path.join(HERE, "mednli.jsonl"), rows)


def build_medsts():
    rng = random.Random(11)
    pairs = [(w, g) for w, g in SELECTED]
    rows = []
    for i in range(200):
        w, g = pairs[rng.randrange(len(pairs))]
        w2, g2 = pairs[rng.randrange(len(pairs))]
        kind = rng.randrange(4)
        if kind == 0:
            s1, s2 = "Patient presents with %s." % w, "Patient presents with %s." % g
            score = 4.5 + rng.randrange(6) / 10
        elif kind == 1:
            s1, s2 = "Patient denies %s." % w, "Patient reports %s." % g
            score = 2.0 + rng.randrange(10) / 10
        elif kind == 2:
            s1, s2 = "History of %s." % w, "History of %s and %s." % (g, g2)
            score = 3.0 + rng.randrange(10) / 10
        else:
            s1, s2 = "Patient has %s." % w, "Patient has %s." % g2
            score = rng.randrange(15) / 10
        split = "train" if i < 150 else "test"
        rows.append({"id": "sts-%03d" % i, "sentence1": s1, "sentence2": s2,
                     "label": round(min(score, 5.0), 1), "split": split})
    write_jsonl(os.path.join(HERE, "medsts.jsonl"), rows)


def main():
    lexicon = build_lexicon()
    write_jsonl(os.path.join(HERE, "lexicon.jsonl"), lexicon)
    build_plan(lexicon)
    build_mednli()
    build_medsts()


if __name__ == "__main__":
    main()
