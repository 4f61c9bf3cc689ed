#!/usr/bin/env python3
"""Regenerate src/twinsight/data/demo_corpus.jsonl (200 synthetic tweets).

Deterministic: fixed seed, fixed templates. The corpus exercises every
ingestion feature (mentions, URLs, RT markers, emoticons, locations,
multi-category hashtags) and keeps a few recurring topic phrases so the
co-occurrence rankings are non-trivial.
"""

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "twinsight" / "data" / "demo_corpus.jsonl"

PLACES = [
    ("Singapore", 1.3521, 103.8198),
    ("New York", 40.7128, -74.006),
    ("London", 51.5074, -0.1278),
    ("Tokyo", 35.6762, 139.6503),
    ("Sydney", -33.8688, 151.2093),
    ("Berlin", 52.52, 13.405),
]

AUTHORS = [
    "maya_eats", "tom_runs", "cityrider", "technikki", "drpatel", "lu_wellness",
    "gymrat_joe", "foodie_fern", "transit_tim", "dataduchess", "nurse_nina",
    "pixel_pat", "chef_carlos", "yogini_yu", "busdriver_bob", "ai_andrea",
]

# (categories-via-hashtags, text template, polarity hint for variety only)
TEMPLATES = [
    # Food
    ("Food", "Loved the green smoothie at {mention} pop-up, such a great start :) #vegan #eatclean", "pos"),
    ("Food", "This vegan tacos recipe is amazing, fresh salsa and avocado #vegan #cook", "pos"),
    ("Food", "Terrible service and a bland green smoothie today. Disappointed #resturant #food", "neg"),
    ("Food", "Quinoa bowl with roasted veggies for lunch #eatclean #glutenfree", "neu"),
    ("Food", "Meal prep done: vegan tacos, quinoa bowl, protein snacks for the week #cook #protein", "neu"),
    ("Food", "The pumpkin pie at the market was awful, soggy crust :( #food", "neg"),
    ("Food", "Best organic salad bar in town, love their dressing {url} #organic #eatclean", "pos"),
    ("Food", "Counting calories this month, skipping the snack aisle #calories #snack", "neu"),
    # Healthcare
    ("Healthcare", "New digital health app tracks my migraine triggers, really helpful #digitalhealth #migraine", "pos"),
    ("Healthcare", "Pharmacy queue was a nightmare, waited an hour for insulin #pharmacy #diabetes", "neg"),
    ("Healthcare", "Diabetes screening camp at the community centre this weekend #diabetes", "neu"),
    ("Healthcare", "Physical rehab week three: shoulder feels stronger every day :) #rehab", "pos"),
    ("Healthcare", "Migraine again, third day. This pain is unbearable #migraine", "neg"),
    ("Healthcare", "Reading about plastic surgery recovery timelines #plasticsurgery", "neu"),
    ("Healthcare", "Telehealth consult saved me a clinic trip, great experience #digitalhealth", "pos"),
    # Sport
    ("Sport", "Morning yoga class by the river, feeling calm and strong #yoga #workout", "pos"),
    ("Sport", "Hamstring injury ruined my marathon training plan :( #training #workout", "neg"),
    ("Sport", "World cup qualifier tonight, squad rotation expected #worldcup #football", "neu"),
    ("Sport", "New treadmill interval workout killed my legs but felt amazing #treadmill #getfit", "pos"),
    ("Sport", "Basketball finals were a disaster, we lost by twenty #basketball", "neg"),
    ("Sport", "Trying the gym's new strength training program #training #gainz", "neu"),
    ("Sport", "Soccer practice moved indoors because of rain #soccer", "neu"),
    # Technology
    ("Technology", "The new smart sensor kit makes home automation so easy, love it #iot #tech", "pos"),
    ("Technology", "Cloud outage broke our dashboards all morning, terrible timing #cloudcomputing #tech", "neg"),
    ("Technology", "Big data pipeline talk at the meetup tonight #bigdata #technews", "neu"),
    ("Technology", "Machine learning model finally beats the baseline, so happy :) #ai #innovation", "pos"),
    ("Technology", "Virtual reality demo made me dizzy and sick #virtualreality", "neg"),
    ("Technology", "Comparing smart sensor platforms for the warehouse project #iot #bigdata", "neu"),
    ("Technology", "Our chatbot shipped to production today {url} #ai #tech", "neu"),
    # Transport
    ("Transport", "Traffic jam on the highway for two hours, total gridlock #trafficjam #traffic", "neg"),
    ("Transport", "The new express bus line is fast and reliable, great upgrade #sbstransit #transport", "pos"),
    ("Transport", "Self driving shuttle pilot starts downtown next month #selfdriving #transport", "neu"),
    ("Transport", "Uber surge pricing again, paid double for a short ride #uber", "neg"),
    ("Transport", "Cycling lanes expansion approved, sustainable commute wins :) #sustainable #transport", "pos"),
    ("Transport", "Train signalling fault delayed the morning commute #smrt", "neg"),
    ("Transport", "Road works on the east corridor until Friday #traffic #lta", "neu"),
    # Cross-category (hashtags from two categories)
    ("Food+Sport", "Green smoothie after yoga class, perfect recovery combo :) #vegan #yoga", "pos"),
    ("Food+Sport", "Protein pancakes fueled my marathon training this morning #protein #training", "pos"),
    ("Food+Healthcare", "Nutritionist says a glutenfree diet may ease my migraine #glutenfree #migraine", "neu"),
    ("Technology+Transport", "Smart sensor network now tracks traffic flow in real time #iot #traffic", "neu"),
    ("Technology+Healthcare", "Wearable glucose monitor syncs straight to the clinic #digitalhealth #iot", "pos"),
    ("Sport+Technology", "Virtual reality spin class is surprisingly fun #virtualreality #workout", "pos"),
    ("Food+Transport", "Food truck stuck in the traffic jam, lunch ruined #food #trafficjam", "neg"),
]

MENTIONS = ["@citycafe", "@metroline", "@gymbuddy", "@cloudops", "@wellnessdaily"]


def fake_url(rng):
    return "https://t.co/" + "".join(rng.choice("abcdefghijkmnpqrstuvwxyz23456789") for _ in range(8))


def main():
    rng = random.Random(42)
    rows = []
    i = 0
    while len(rows) < 200:
        cat, template, _hint = TEMPLATES[i % len(TEMPLATES)]
        i += 1
        text = template
        if "{mention}" in text:
            text = text.replace("{mention}", rng.choice(MENTIONS))
        if "{url}" in text:
            text = text.replace("{url}", fake_url(rng))
        if rng.random() < 0.15:
            text = "RT " + rng.choice(MENTIONS) + ": " + text
        day = rng.randrange(7)
        hour = rng.randrange(24)
        minute = rng.randrange(60)
        second = rng.randrange(60)
        rec = {
            "id": f"demo-{len(rows) + 1:04d}",
            "text": text,
            "created_at": f"2017-06-{day + 1:02d}T{hour:02d}:{minute:02d}:{second:02d}Z",
            "user": rng.choice(AUTHORS),
            "lang": "en",
        }
        if rng.random() < 0.55:
            place, lat, lon = rng.choice(PLACES)
            rec["place"] = place
            # jitter so centroids differ from the city anchor
            rec["lat"] = round(lat + rng.uniform(-0.05, 0.05), 6)
            rec["lon"] = round(lon + rng.uniform(-0.05, 0.05), 6)
        rows.append(rec)
    with OUT.open("w", encoding="utf-8") as fh:
        for rec in rows:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
    print(f"wrote {len(rows)} tweets to {OUT}")


if __name__ == "__main__":
    main()
