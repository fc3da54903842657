#!/usr/bin/env python3
"""Regenerates the synthetic fixture set under data/fixtures.

Deterministic: rerunning produces identical files.
"""
import datetime as dt
import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "fixtures"
START = dt.date(2019, 7, 1)
END = dt.date(2021, 6, 30)

POS = ["good", "great", "relief", "stable", "hopeful", "better", "affordable", "glad", "recovery"]
NEG = ["terrible", "worried", "crisis", "awful", "panic", "painful", "struggling", "hate", "unfair"]
NEU = ["today", "report", "data", "week", "news", "update", "numbers", "market", "latest"]
TOPIC = ["inflation", "food prices", "gas price", "rent price", "prices", "deflation",
         "high gasoline price", "hyperinflation", "low food price"]
DECOR = ["", "", " #inflation", " #economy", " https://t.co/{n}", " @{u}", " \U0001F4B8",
         " \U0001F62C", " http://news.example.com/{n}", " ☕"]
USERS = ["john", "econ_watch", "mary_k", "fedwatcher", "jane99"]
REGION_TAGS = {
    "US": ["US", "United States", "New York", "Texas", "california"],
    "GB": ["GB", "United Kingdom", "London", "Manchester"],
    "EU": ["Germany", "France", "Ireland"],
    "UNKNOWN": [None, ""],
    "OTHER": ["Mars", "somewhere nice"],
}


def sentence(rng, label):
    topic = rng.choice(TOPIC)
    if label == 1:
        body = rng.choice([f"{topic} looks {rng.choice(POS)}",
                           f"really {rng.choice(POS)} news on {topic}",
                           f"{rng.choice(POS)} to see {topic} so {rng.choice(POS)}",
                           f"{topic} is not {rng.choice(NEG)} anymore"])
    elif label == -1:
        body = rng.choice([f"{topic} is {rng.choice(NEG)}",
                           f"very {rng.choice(NEG)} about {topic}",
                           f"{rng.choice(NEG)} {topic} again, {rng.choice(NEG)}",
                           f"{topic} is not {rng.choice(POS)} at all"])
    else:
        body = rng.choice([f"{topic} {rng.choice(NEU)}",
                           f"{rng.choice(NEU)} on {topic} {rng.choice(NEU)}",
                           f"new {topic} {rng.choice(NEU)} out"])
    deco = rng.choice(DECOR).format(n=rng.randrange(1000, 9999), u=rng.choice(USERS))
    text = body + deco
    return text[0].upper() + text[1:]


def tweets(rng):
    weeks = [(START + dt.timedelta(days=7 * k)) for k in range((END - START).days // 7 + 1)]
    plan = []
    # US and GB appear in most weeks so weekly regressions have overlap
    for region, count in (("US", 96), ("GB", 84), ("EU", 24), ("UNKNOWN", 12), ("OTHER", 8)):
        for w in sorted(rng.sample(weeks, count)):
            plan.append((region, w + dt.timedelta(days=rng.randrange(7))))
    rows = []
    for i, (region, day) in enumerate(sorted(plan, key=lambda p: (p[1], p[0]))):
        label = rng.choices([1, 0, -1], weights=[0.5, 0.2, 0.3])[0]
        ts = dt.datetime.combine(day, dt.time(rng.randrange(24), rng.randrange(60), rng.randrange(60)))
        rows.append({"id": f"t{1000 + i}", "created_at": ts.strftime("%Y-%m-%dT%H:%M:%SZ"),
                     "text": sentence(rng, label), "region": rng.choice(REGION_TAGS[region]),
                     "_label": label})
    # tweets that the keyword filter drops
    for j in range(10):
        day = START + dt.timedelta(days=rng.randrange((END - START).days))
        rows.append({"id": f"x{j}", "created_at": f"{day.isoformat()}T12:00:00Z",
                     "text": rng.choice(["Lovely weather today", "Match highlights tonight",
                                         "New phone who dis", "Coffee first"]),
                     "region": "US", "_label": 0})
    rows.sort(key=lambda r: (r["created_at"], r["id"]))
    return rows


def labels(rng, n=150):
    out = []
    for _ in range(n):
        label = rng.choices([1, 0, -1], weights=[0.45, 0.25, 0.30])[0]
        text = sentence(rng, label)
        if rng.random() < 0.08:
            label = rng.choice([l for l in (1, 0, -1) if l != label])
        out.append((text, label))
    return out


def csv_field(s):
    return '"' + s.replace('"', '""') + '"' if any(c in s for c in ',"\n') else s


def trends(rng):
    lines = ["date,region,group,value"]
    first = START - dt.timedelta(days=START.weekday() + 1)  # Sunday-dated weeks
    n = (END - first).days // 7 + 1
    for region in ("GLOBAL", "GB", "US"):
        for group, base in (("deflation", 12), ("inflation", 45), ("neutral", 60)):
            level = float(base)
            for k in range(n):
                level = max(0.0, min(100.0, level + rng.gauss(0, 4) + 0.1 * (base - level)))
                value = 0 if rng.random() < 0.03 else int(round(level))
                lines.append(f"{(first + dt.timedelta(days=7 * k)).isoformat()},{region},{group},{value}")
    return "\n".join(lines) + "\n"


def yields(rng, nominal, real):
    lines = ["date,nominal,real"]
    day = START - dt.timedelta(days=28)
    while day <= END:
        if day.weekday() < 5:
            nominal += rng.gauss(0, 0.03)
            real += rng.gauss(0, 0.025)
            lines.append(f"{day.isoformat()},{nominal:.2f},{real:.2f}")
        day += dt.timedelta(days=1)
    return "\n".join(lines) + "\n"


CONFIG = """\
# Pipeline configuration for the bundled synthetic fixtures.
seed = 42

[paths]
tweets = "tweets.jsonl"
labels = "labels.csv"
trends = "trends.csv"
yields_us = "yields_us.csv"
yields_gb = "yields_gb.csv"
external_scores = "external_scores.csv"
lexicon = "../lexicon.tsv"
stopwords = "../stopwords.txt"
emoji_ranges = "../emoji_ranges.txt"
keywords = "../keywords.ini"
regions = "../regions.csv"

[periods]
before = "2017-01-01..2020-01-01"
during = "2020-01-01..2021-01-01"
after = "2021-01-01..2022-01-01"

[model]
feature = "tfidf"
kind = "mnb"
alpha = 1.0
l2 = 0.001
lr = 0.5
iters = 500
svm_reg = 0.001
svm_epochs = 50
min_df = 1
train_fraction = 0.8

[prep]
drop_user_token = false

[index]
scores = "model"
regions = "ALL,US,GB"
min_n = 1

[regress]
ar_p = "auto"
ar_max_p = 2
"""


def main():
    rng = random.Random(20240611)
    OUT.mkdir(parents=True, exist_ok=True)
    tw = tweets(rng)
    with open(OUT / "tweets.jsonl", "w", encoding="utf-8", newline="\n") as f:
        for r in tw:
            rec = {k: v for k, v in r.items() if not k.startswith("_")}
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")
    with open(OUT / "external_scores.csv", "w", newline="\n") as f:
        f.write("tweet_id,score\n")
        for r in tw:
            if r["id"].startswith("t"):
                f.write(f"{r['id']},{r['_label']}\n")
        f.write("t9998,1\nt9999,-1\n")
    with open(OUT / "labels.csv", "w", encoding="utf-8", newline="\n") as f:
        f.write("text,label\n")
        for text, label in labels(rng):
            f.write(f"{csv_field(text)},{label}\n")
    (OUT / "trends.csv").write_text(trends(rng))
    (OUT / "yields_us.csv").write_text(yields(rng, 1.85, 0.35))
    (OUT / "yields_gb.csv").write_text(yields(rng, 0.80, -2.40))
    (OUT / "pipeline.toml").write_text(CONFIG)


if __name__ == "__main__":
    main()
