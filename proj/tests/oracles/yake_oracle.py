# Copyright 2026 The KPE Authors.
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
"""Straight-line YAKE ranking under lowercase normalization, window 1,
candidates up to 3 words, Levenshtein de-duplication at 0.8.

Usage: python3 yake_oracle.py <text file> <stopword file> [k]
Prints the top-k phrases with scores and the per-term features as JSON.
"""

import json
import math
import statistics
import sys

import textlib


def levenshtein(a, b):
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def similarity(a, b):
    if not a and not b:
        return 1.0
    return 1.0 - levenshtein(a, b) / max(len(a), len(b))


def main(text_path, stop_path, k):
    text = open(text_path, encoding="utf-8").read()
    stop = textlib.load_stopwords(stop_path)
    toks = textlib.tokenize(text)
    sent, n_sent = textlib.sentence_ids(text, toks)

    terms = {}
    order = []

    def term(w):
        key = w.lower()
        if key not in terms:
            terms[key] = dict(tf=0, acr=0, prop=0, stop=False, sents=set(), left=[], right=[])
            order.append(key)
        return terms[key]

    for i, (surface, kind, _, _) in enumerate(toks):
        if kind != "word":
            continue
        t = term(surface)
        t["tf"] += 1
        t["stop"] = t["stop"] or surface.lower() in stop
        t["sents"].add(sent[i])
        first_word = not any(toks[j][1] == "word" and sent[j] == sent[i] for j in range(i))
        letters = [c for c in surface if c.isalpha()]
        if len(letters) >= 2 and all(c.isupper() for c in letters):
            t["acr"] += 1
        elif surface[0].isupper() and not first_word:
            t["prop"] += 1
        if i > 0 and toks[i - 1][1] == "word" and sent[i - 1] == sent[i]:
            left = toks[i - 1][0].lower()
            t["left"].append(left)
            terms[left]["right"].append(surface.lower())

    valid = [t["tf"] for t in terms.values() if not t["stop"]]
    mean = statistics.fmean(valid)
    std = statistics.pstdev(valid)
    max_tf = max(t["tf"] for t in terms.values())

    def disp(side):
        return len(set(side)) / len(side) if side else 0.0

    feats = {}
    for key in order:
        t = terms[key]
        tf = t["tf"]
        casing = max(t["acr"], t["prop"]) / (1 + math.log(tf))
        s = sorted(t["sents"])
        med = statistics.median(s)
        position = math.log(math.log(3 + med))
        frequency = tf / (mean + std)
        rel = 1 + (disp(t["left"]) + disp(t["right"])) * tf / max_tf
        spread = len(s) / n_sent
        score = rel * position / (casing + frequency / rel + spread / rel)
        feats[key] = dict(tf=tf, casing=casing, position=position, frequency=frequency,
                          relatedness=rel, spread=spread, score=score)

    # Candidates: 1..3 consecutive words in one sentence, none a stopword.
    cands = {}
    cand_order = []
    for i in range(len(toks)):
        for length in range(1, 4):
            span = toks[i:i + length]
            if len(span) < length or any(x[1] != "word" for x in span):
                break
            if len({sent[j] for j in range(i, i + length)}) > 1:
                break
            if any(x[0].lower() in stop for x in span):
                break
            norm = " ".join(x[0].lower() for x in span)
            if norm not in cands:
                cands[norm] = dict(count=0, words=[x[0].lower() for x in span])
                cand_order.append(norm)
            cands[norm]["count"] += 1

    scored = []
    for norm in cand_order:
        c = cands[norm]
        ss = [feats[w]["score"] for w in c["words"]]
        scored.append((math.prod(ss) / (c["count"] * (1 + sum(ss))), norm))
    scored.sort(key=lambda x: x[0])  # stable: ties keep first-occurrence order

    top = []
    for score, norm in scored:
        if len(top) >= k:
            break
        if any(similarity(norm, kept) > 0.8 for _, kept in top):
            continue
        top.append((score, norm))

    print(json.dumps({"top": [{"phrase": p, "score": s} for s, p in top],
                      "terms": feats}, ensure_ascii=False, indent=2))


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2], int(sys.argv[3]) if len(sys.argv) > 3 else 3)
