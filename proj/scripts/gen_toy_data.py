#!/usr/bin/env python3
"""Regenerates the toy datasets under data/toy/.

Everything is a fixed pattern (no RNG) so reruns are byte-identical. The
texts are innocuous placeholders; only the label columns matter to the
analyses.
"""

import csv
import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "toy")


def flip(label):
    return "N" if label == "Y" else "Y"


COLD_TEXT_POOL = [
    "the soup recipe from @chef_rosa turned out better than expected",
    "morning practice got moved to the old gym again",
    "bruh the weather flipped twice before lunch",
    "that documentary about lighthouses was surprisingly moving 👀",
    "finna reread the whole trilogy this weekend",
    "someone left a whole crate of apples in the break room",
    "the 8am train was on time for once, small miracles",
    "deadass the best bagel in town comes from the tiny cart on 5th",
    "check the schedule at www.example.org before heading out",
    "the choir picked three new songs for the spring concert",
    "my neighbor's garden gnome collection keeps growing 🔥",
    "hello from the rainiest campsite in the entire valley",
]

COLD_COMBOS = [
    # (Off, Slur, Nom, Dist, rows) — covers every category rule.
    ("N", "Y", "N", "N", 8),   # reclaimed
    ("Y", "Y", "N", "N", 10),  # off-slur
    ("Y", "N", "Y", "N", 10),  # off-nom
    ("Y", "N", "N", "Y", 8),   # composite with Dist=Y
    ("N", "N", "N", "N", 16),  # composite, fully N
    ("N", "N", "Y", "N", 8),   # composite with Nom=Y
]

CATS = ["food", "weather", "sports", "music"]


def gen_cold():
    rows = []
    i = 0
    for off, slur, nom, dist, count in COLD_COMBOS:
        for _ in range(count):
            text = COLD_TEXT_POOL[i % len(COLD_TEXT_POOL)]
            if i % 9 == 4:
                text += " and the committee agreed, somehow"
            off_annos = [off, off, off]
            if i % 5 == 0:
                off_annos = [off, off, flip(off)]
            if i in (7, 23):
                off_annos = [off, off, ""]
            slur_annos = [slur, slur, slur]
            if i % 7 == 3:
                slur_annos = [slur, flip(slur), slur]
            rows.append({
                "ID": i + 1,
                "Text": text,
                "Cat": CATS[i % len(CATS)],
                "Off": off, "Off1": off_annos[0], "Off2": off_annos[1], "Off3": off_annos[2],
                "Slur": slur, "Slur1": slur_annos[0], "Slur2": slur_annos[1], "Slur3": slur_annos[2],
                "Nom": nom, "Nom1": nom, "Nom2": nom, "Nom3": nom,
                "Dist": dist, "Dist1": dist, "Dist2": dist, "Dist3": dist,
            })
            i += 1
    return rows


COLD_HEADER = ["ID", "Text", "Cat", "Off", "Off1", "Off2", "Off3",
               "Slur", "Slur1", "Slur2", "Slur3", "Nom", "Nom1", "Nom2", "Nom3",
               "Dist", "Dist1", "Dist2", "Dist3"]

HC_FUNCTIONALITIES = [
    # (functionality, gold, rows)
    ("counter_quote_nh", "non-hateful", 3),
    ("counter_ref_nh", "non-hateful", 3),
    ("derog_neg_emote_h", "hateful", 3),
    ("derog_neg_attrib_h", "hateful", 3),
    ("derog_dehum_h", "hateful", 2),
    ("ident_neutral_nh", "non-hateful", 4),
    ("ident_pos_nh", "non-hateful", 3),
    ("negate_pos_h", "hateful", 3),
    ("negate_neg_nh", "non-hateful", 3),
    ("target_obj_nh", "non-hateful", 2),
    ("target_indiv_nh", "non-hateful", 2),
    ("target_group_nh", "non-hateful", 2),
    ("phrase_question_h", "hateful", 3),
    ("phrase_opinion_h", "hateful", 3),
    ("profanity_h", "hateful", 3),
    ("profanity_nh", "non-hateful", 3),
    ("ref_subs_clause_h", "hateful", 3),
    ("ref_subs_sent_h", "hateful", 3),
    ("slur_h", "hateful", 4),
    ("slur_homonym_nh", "non-hateful", 2),
    ("slur_reclaimed_nh", "non-hateful", 2),
    ("spell_char_swap_h", "hateful", 2),
    ("spell_missing_char_h", "hateful", 2),
    ("spell_space_del_h", "hateful", 2),
    ("threat_dir_h", "hateful", 3),
    ("threat_norm_h", "hateful", 3),
]

HC_TARGETS = ["group one", "group two", "group three", "group four",
              "group five", "group six", "group seven"]

HC_TEXT_POOL = [
    "typical of a zorble to ruin a perfectly good picnic",
    "I would never say that about a zorble, quoting it proves nothing",
    "zorbles are actually wonderful neighbors and bakers",
    "no zorble has ever returned my stapler",
    "they said z o r b l e s are the worst at parking",
    "honestly zorbles run the best lemonade stands",
]

HC_HEADER = ["functionality", "case_id", "test_case", "label_gold", "target_ident",
             "direction", "focus_words", "focus_lemma", "ref_case_id", "ref_templ_id",
             "templ_id"]


def gen_hatecheck():
    rows = []
    case_id = 1
    for functionality, gold, count in HC_FUNCTIONALITIES:
        for k in range(count):
            target = ""
            if not functionality.startswith("profanity"):
                target = HC_TARGETS[(case_id - 1) % len(HC_TARGETS)]
            ref_case = ""
            ref_templ = ""
            if functionality.startswith("counter_ref"):
                ref_case = str(case_id - 3)
                ref_templ = str(100 + case_id - 3)
            rows.append({
                "functionality": functionality,
                "case_id": case_id,
                "test_case": HC_TEXT_POOL[(case_id + k) % len(HC_TEXT_POOL)],
                "label_gold": gold,
                "target_ident": target,
                "direction": "general" if case_id % 2 else "targeted",
                "focus_words": "zorble",
                "focus_lemma": "zorble",
                "ref_case_id": ref_case,
                "ref_templ_id": ref_templ,
                "templ_id": 100 + case_id,
            })
            case_id += 1
    return rows


OLID_ROWS = [
    # (text, gold) — innocuous placeholders; some contain "female"/"Female",
    # some carry dialect-model words, mentions, URLs, emoji, varied lengths.
    ("the female lead carried that entire film", "NOT"),
    ("bruh finna nap all afternoon", "NOT"),
    ("what a ridiculous take on the playoffs", "OFF"),
    ("Female athletes deserve far more coverage than they get", "NOT"),
    ("@sports_desk your bracket predictions were hilarious 👀", "NOT"),
    ("this referee is a complete clown show", "OFF"),
    ("deadass the morning weather report was wrong again", "NOT"),
    ("the female goalkeeper saved the whole match", "NOT"),
    ("whoever designed this parking lot hates joy", "OFF"),
    ("hello and welcome to the worst commute of the year", "OFF"),
    ("zzz qqq xyzzy", "NOT"),
    ("check www.example.org for the female chess league standings", "NOT"),
    ("that hot take was pure garbage", "OFF"),
    ("finna bring snacks for the whole office", "NOT"),
    ("the weather in the valley keeps ruining the morning rides", "NOT"),
    ("your so-called analysis is an insult to spreadsheets", "OFF"),
    ("the female pilot nailed the crosswind landing", "NOT"),
    ("bruh the queue wrapped around the block twice", "NOT"),
    ("this soup is a crime against cooking", "OFF"),
    ("morning hello to everyone except the printer", "OFF"),
    ("the Female Robotics Club won the regional final 🔥", "NOT"),
    ("what an absolute disgrace of a penalty call", "OFF"),
    ("deadass loved the quiet weather this morning", "NOT"),
    ("the new schedule is pure chaos and I respect it", "NOT"),
    ("that umpire needs new glasses immediately", "OFF"),
    ("the female quartet closed the festival beautifully", "NOT"),
    ("https://fakelink.io has the full bracket", "NOT"),
    ("your parking technique is an act of aggression", "OFF"),
    ("finna reread the rulebook because someone clearly has not", "OFF"),
    ("hello weather balloon, goodbye picnic", "NOT"),
    ("the female commentators called the upset perfectly", "NOT"),
    ("this printer is the villain of the whole floor", "OFF"),
    ("bruh the bus driver waited, legend behavior", "NOT"),
    ("an absolutely shambolic half of football", "OFF"),
    ("the morning market had the good peaches again", "NOT"),
    ("whoever keeps stealing my pens, we are enemies now", "OFF"),
    ("the female side of the draw looks unstoppable", "NOT"),
    ("deadass the elevator music slaps", "NOT"),
    ("that was the laziest defending I have ever seen", "OFF"),
    ("weather says rain, my knees say thunderstorm", "NOT"),
]

DIALECT_ROWS = [
    ("finna", 90, 10),
    ("bruh", 80, 20),
    ("deadass", 75, 25),
    ("hello", 30, 70),
    ("weather", 10, 90),
    ("morning", 20, 80),
    ("the", 50, 50),
]


def write_csv(name, header, rows):
    path = os.path.join(OUT, name)
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    print("wrote", path, f"({len(rows)} rows)")


def write_predictions_csv(name, values):
    path = os.path.join(OUT, name)
    with open(path, "w", newline="") as f:
        f.write("prediction\n")
        for value in values:
            f.write(value + "\n")
    print("wrote", path, f"({len(values)} rows)")


def main():
    os.makedirs(OUT, exist_ok=True)

    cold = gen_cold()
    write_csv("cold_toy.csv", COLD_HEADER, cold)
    nocat = [{k: v for k, v in row.items() if k != "Cat"} for row in cold]
    write_csv("cold_nocat.csv", [c for c in COLD_HEADER if c != "Cat"], nocat)
    # Correct except every 7th row (7 is coprime with the Cat cycle, so the
    # errors spread across all slices); predictions in the model's own space.
    cold_preds = []
    for i, row in enumerate(cold):
        gold = row["Off"] if i % 7 != 3 else flip(row["Off"])
        cold_preds.append("LABEL_1" if gold == "Y" else "LABEL_0")
    write_predictions_csv("cold_preds.csv", cold_preds)

    hc = gen_hatecheck()
    write_csv("hatecheck_toy.csv", HC_HEADER, hc)
    preds_a, preds_b = [], []
    for i, row in enumerate(hc):
        gold_a = row["label_gold"] if i % 4 != 1 else (
            "hateful" if row["label_gold"] == "non-hateful" else "non-hateful")
        gold_b = row["label_gold"] if i % 3 != 2 else (
            "hateful" if row["label_gold"] == "non-hateful" else "non-hateful")
        preds_a.append("LABEL_1" if gold_a == "hateful" else "LABEL_0")
        preds_b.append("LABEL_1" if gold_b == "hateful" else "LABEL_0")
    write_predictions_csv("hc_preds_a.csv", preds_a)
    write_predictions_csv("hc_preds_b.csv", preds_b)

    write_csv("olid_toy.csv", ["Text", "label"],
              [{"Text": t, "label": g} for t, g in OLID_ROWS])
    with open(os.path.join(OUT, "olid_preds.jsonl"), "w") as f:
        for i, (_, gold) in enumerate(OLID_ROWS):
            label = gold if i % 5 != 2 else ("OFF" if gold == "NOT" else "NOT")
            f.write(json.dumps({"prediction": 1.0 if label == "OFF" else 0.0}) + "\n")
    print("wrote", os.path.join(OUT, "olid_preds.jsonl"), f"({len(OLID_ROWS)} rows)")
    write_predictions_csv("olid_preds.csv",
                          ["1.0" if (g if i % 5 != 2 else ("OFF" if g == "NOT" else "NOT")) == "OFF"
                           else "0.0" for i, (_, g) in enumerate(OLID_ROWS)])

    with open(os.path.join(OUT, "dialect_toy.tsv"), "w") as f:
        f.write("word\taave\tsae\n")
        for word, a, s in DIALECT_ROWS:
            f.write(f"{word}\t{a}\t{s}\n")
    print("wrote", os.path.join(OUT, "dialect_toy.tsv"))

    with open(os.path.join(OUT, "cold_nocat_schema.txt"), "w") as f:
        f.write("""# COLD-style schema without the Cat column: category analysis
# falls back to the Off/Slur/Nom/Dist rules.
name = coldlite
text_column = Text
gold_column = Off
labels = Y, N
features = ID, Slur, Nom, Dist
annotators.Off = Off1, Off2, Off3
source.path = cold_nocat.csv
""")
    with open(os.path.join(OUT, "custom_schema.txt"), "w") as f:
        f.write("""name = toyreviews
text_column = Text
gold_column = label
labels = pos, neg
source.path = reviews.csv
""")
    reviews = [
        {"Text": "crisp pages, wobbly plot", "label": "neg"},
        {"Text": "a cozy read for rainy evenings", "label": "pos"},
        {"Text": "the sequel drags in the middle", "label": "neg"},
        {"Text": "maps inside the cover, instant pos", "label": "pos"},
        {"Text": "ending felt rushed", "label": "neg"},
        {"Text": "characters you would lend an umbrella to", "label": "pos"},
        {"Text": "glossary longer than the story", "label": "neg"},
        {"Text": "the audiobook narrator deserves a raise", "label": "pos"},
    ]
    write_csv("reviews.csv", ["Text", "label"], reviews)
    write_predictions_csv("reviews_preds.csv",
                          [r["label"] if i % 3 else
                           ("pos" if r["label"] == "neg" else "neg")
                           for i, r in enumerate(reviews)])
    print("done")


if __name__ == "__main__":
    main()
