#!/usr/bin/env python3
"""Regenerate src/twinsight/data/sentiment_lexicon.tsv.

The lexicon is project-curated: hand-scored stems on the common integer
valence scale [-5, +5] (zero excluded), mechanically expanded with regular
English inflections. Irregular forms are listed explicitly. Run from the
repo root:

    python scripts/gen_sentiment_lexicon.py
"""

from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "twinsight" / "data" / "sentiment_lexicon.tsv"

NEGATORS = {"not", "no", "never"}
# expansions of these acronyms live in acronyms.tsv; keys stay out of the lexicon
ACRONYM_KEYS = {
    "lol", "lmao", "rofl", "lmfao", "omg", "wth", "wtf", "ffs", "fml", "smh",
    "gr8", "luv", "thx", "ty", "plz", "pls", "jk", "tbh", "ikr", "imo",
    "imho", "btw", "fyi", "irl", "yolo", "bff", "xoxo", "afaik", "brb",
}

VOWELS = "aeiou"


def s_form(w):
    if w.endswith("y") and len(w) > 1 and w[-2] not in VOWELS:
        return w[:-1] + "ies"
    if w.endswith(("s", "x", "z", "ch", "sh")):
        return w + "es"
    return w + "s"


def ed_form(w, double=False):
    if w.endswith("e"):
        return w + "d"
    if w.endswith("y") and len(w) > 1 and w[-2] not in VOWELS:
        return w[:-1] + "ied"
    if double:
        return w + w[-1] + "ed"
    return w + "ed"


def ing_form(w, double=False):
    if w.endswith("ie"):
        return w[:-2] + "ying"
    if w.endswith("e") and not w.endswith("ee"):
        return w[:-1] + "ing"
    if double:
        return w + w[-1] + "ing"
    return w + "ing"


def ly_form(w):
    # comparatives, superlatives and -ed/-ly adjectives make bad adverbs
    if w.endswith(("ly", "ed", "er", "est")):
        return None
    if w.endswith("y") and len(w) > 1 and w[-2] not in VOWELS:
        return w[:-1] + "ily"
    if w.endswith("le") and len(w) > 2 and w[-3] not in VOWELS:
        return w[:-1] + "y"
    if w.endswith("ll"):
        return w + "y"
    if w.endswith("ic"):
        return w + "ally"
    return w + "ly"


# kind codes: a = adjective (+ -ly adverb), A = adjective base only,
# v = regular verb (+ s/ed/ing), V = verb doubling its final consonant,
# n = noun (+ plural), N = mass noun (no plural), x = fixed single form
ENTRIES = [
    # ----- +5 -----
    (5, "a", ["breathtaking", "outstanding", "superb", "phenomenal", "magnificent",
              "sensational", "miraculous", "flawless", "unbeatable", "majestic"]),
    (5, "x", ["masterpiece", "masterpieces", "hurrah", "woohoo", "yay"]),
    # ----- +4 -----
    (4, "a", ["amazing", "awesome", "brilliant", "excellent", "exceptional",
              "extraordinary", "fabulous", "fantastic", "incredible", "marvelous",
              "marvellous", "wonderful", "spectacular", "stunning", "exquisite",
              "euphoric", "exhilarating", "glorious", "triumphant", "ecstatic",
              "unstoppable", "wondrous"]),
    (4, "A", ["heavenly", "overjoyed", "thrilled"]),
    (4, "v", ["rejoice", "exhilarate", "captivate", "enchant", "dazzle",
              "electrify", "mesmerize"]),
    (4, "n", ["triumph", "jackpot", "godsend", "delight"]),
    (4, "N", ["bliss", "rapture"]),
    (4, "x", ["win", "wins", "winning", "winner", "winners", "won", "victorious",
              "victory", "victories", "champion", "champions", "blissful",
              "delighted", "delightful", "overwhelmed"]),
    # ----- +3 -----
    (3, "a", ["great", "happy", "beautiful", "gorgeous", "splendid", "joyful",
              "joyous", "cheerful", "charming", "elegant", "radiant", "vibrant",
              "graceful", "refreshing", "remarkable", "impressive", "magical",
              "perfect", "precious", "divine", "serene", "sublime", "terrific",
              "tremendous", "dreamy", "adorable", "angelic", "jubilant",
              "admirable", "courageous", "heroic", "honorable", "passionate",
              "proud", "grateful", "thankful", "festive", "glad", "merry",
              "optimistic", "hopeful"]),
    (3, "A", ["good", "stellar", "superior", "lovely", "blessed", "spirited",
              "heartwarming", "inspiring", "uplifting"]),
    (3, "v", ["love", "adore", "admire", "amaze", "astonish", "impress", "inspire",
              "celebrate", "cherish", "congratulate", "praise", "applaud", "excite",
              "empower", "flourish", "thrive", "uplift", "treasure", "energize"]),
    (3, "n", ["miracle", "hero", "heroine", "blessing", "celebration",
              "sweetheart", "darling", "gem", "treat"]),
    (3, "N", ["joy", "happiness", "paradise", "honor", "honour", "glory",
              "passion"]),
    (3, "x", ["loved", "loving", "lover", "lovers", "best", "better", "congrats",
              "congratulations", "kudos", "bravo", "cheers", "beloved", "heaven",
              "excited", "exciting", "excitement", "fascinated", "fascinating",
              "succeeded", "successful", "successfully", "success", "successes",
              "feast", "feasts", "yum", "yummy", "mmm", "wow"]),
    # ----- +2 -----
    (2, "a", ["nice", "fine", "pleasant", "sweet", "tasty", "delicious",
              "fresh", "healthy", "cozy", "comfortable", "helpful",
              "useful", "valuable", "worthy", "reliable", "dependable",
              "affordable", "generous", "gentle", "kind", "polite", "courteous",
              "honest", "sincere", "loyal", "faithful", "peaceful", "calm",
              "relaxing", "restful", "soothing", "satisfying", "rewarding",
              "promising", "productive", "efficient", "effective", "capable",
              "competent", "confident", "convenient", "creative", "clever",
              "bright", "sunny", "warm", "welcoming", "memorable",
              "enjoyable", "entertaining", "engaging", "interesting", "intriguing",
              "lively", "vivid", "smooth", "steady", "solid", "stable", "strong",
              "sturdy", "robust", "wholesome", "hearty", "juicy", "crispy",
              "tender", "aromatic", "fragrant", "stylish", "classy", "neat",
              "tidy", "innovative", "smart", "talented", "skilled", "skillful",
              "gifted", "witty", "playful", "keen", "eager", "enthusiastic",
              "brave", "bold", "gracious", "genuine", "authentic", "balanced",
              "natural", "pure", "glowing", "grand", "pleasing", "pretty",
              "secure", "thriving", "abundant", "plentiful", "supportive",
              "resilient", "breezy", "painless", "effortless", "savory"]),
    (2, "A", ["friendly", "handy", "trusty", "comfy", "shiny", "trendy", "fancy",
              "sleek", "funny", "hilarious", "fun", "cool", "groovy", "super",
              "motivated", "inspired", "refreshed", "energetic", "fit", "cute",
              "prime", "premium", "deluxe", "pleased", "stronger", "healthier",
              "tastier", "happier", "safer", "cleaner", "fairer", "brighter",
              "easier", "strongest", "safest", "cleanest", "finest", "greatest",
              "happiest", "healthiest", "tastiest", "easiest"]),
    (2, "v", ["like", "enjoy", "appreciate", "approve", "attract", "benefit",
              "comfort", "encourage", "entertain", "improve", "motivate", "please",
              "protect", "recommend", "respect", "reward", "satisfy", "save",
              "share", "smile", "succeed", "support", "thank", "trust", "welcome",
              "achieve", "accomplish", "advance", "assist", "care", "ease",
              "embrace", "engage", "enhance", "enrich", "favor", "gain", "glow",
              "heal", "hope", "help", "interest", "invite", "laugh", "nourish",
              "recover", "refresh", "relax", "relieve", "restore", "shine",
              "soothe", "sparkle", "strengthen", "surprise", "volunteer", "wish",
              "bloom", "blossom", "boost"]),
    (2, "V", ["grin", "hug"]),
    (2, "n", ["friend", "gift", "bonus", "advantage", "opportunity", "solution",
              "upgrade", "improvement", "achievement", "accomplishment",
              "milestone", "breakthrough", "dream", "favour", "fortune",
              "holiday", "bargain", "deal", "pleasure", "promise", "smile",
              "hug", "reward", "benefit"]),
    (2, "N", ["comfort", "confidence", "courage", "energy", "faith", "freedom",
              "fun", "grace", "gratitude", "harmony", "health", "kindness",
              "laughter", "luck", "peace", "pride", "progress", "prosperity",
              "relief", "strength", "warmth", "wealth", "wellness", "wisdom",
              "wonder", "hope"]),
    (2, "x", ["thanks", "thankfully", "luckily", "happily", "gladly",
              "deliciously", "freshly", "perfectly", "safely", "easygoing",
              "favorited", "faved", "liked", "likes", "liking", "enjoyed",
              "enjoying", "enjoys", "recommended", "recommends", "recommending",
              "improved", "improves", "improving", "okay", "ok", "alright",
              "worth", "worthwhile", "upbeat", "chill", "chilled", "glee",
              "gleeful", "haha", "hahaha", "hehe", "cheer", "cheered",
              "cheering", "stoked", "rad", "legit", "epic", "lush", "gold",
              "golden", "restored", "thrill", "thrills", "thrilling"]),
    # ----- +1 -----
    (1, "a", ["decent", "adequate", "acceptable", "sufficient", "fair", "mild",
              "modest", "usable", "workable", "tolerable", "passable",
              "curious", "casual", "simple", "quick", "quiet", "soft",
              "punctual"]),
    (1, "A", ["timely"]),
    (1, "v", ["accept", "agree", "allow", "calm", "clean", "fix", "greet",
              "guide", "learn", "mend", "notice", "offer", "prepare", "settle",
              "solve"]),
    (1, "n", ["insight", "upside"]),
    (1, "x", ["finely", "agreed", "agreeable", "interested", "welcomed",
              "understood", "understand", "understands", "understanding",
              "taught", "teach", "teaches", "teaching", "yes", "yep", "yeah",
              "sure", "please", "pleasantly", "aww", "aw"]),
    # ----- -1 -----
    (-1, "a", ["dull", "bland", "boring", "plain", "mediocre", "average",
               "slow", "noisy", "odd", "weird", "strange", "awkward",
               "clumsy", "unclear", "uncertain", "unsure", "doubtful",
               "hesitant", "reluctant", "weary", "restless", "uneasy",
               "unusual", "costly", "cramped", "chilly", "damp", "soggy",
               "stale", "greasy", "salty", "sour", "questionable", "shaky",
               "sloppy", "spotty", "patchy", "petty", "trivial"]),
    (-1, "A", ["late", "tired", "sleepy", "bored", "confused", "confusing",
               "pricey", "crowded", "mixed", "minor", "bitter"]),
    (-1, "v", ["bother", "complain", "doubt", "delay", "hesitate", "ignore",
               "interrupt", "lack", "misplace", "mutter", "postpone",
               "sigh", "stall", "stumble", "wait", "wander", "worry", "yawn"]),
    (-1, "V", ["nag", "shrug", "slip"]),
    (-1, "n", ["complaint", "drawback", "flaw", "glitch", "hassle", "hiccup",
               "issue", "mishap", "nuisance", "setback", "shortage", "typo",
               "chore", "grumble", "detour", "queue"]),
    (-1, "x", ["meh", "blah", "ugh", "hmph", "unfortunately", "slowly",
               "barely", "hardly", "limited", "lacking", "lacks", "lacked",
               "overpriced", "overrated", "underwhelming", "underwhelmed",
               "lukewarm", "unimpressed", "unimpressive", "tedious",
               "tediously", "delayed", "delays", "delaying", "nope", "nah"]),
    # ----- -2 -----
    (-2, "a", ["bad", "poor", "sad", "unhappy", "angry", "unpleasant", "ugly",
               "dirty", "messy", "filthy", "nasty", "gross", "gloomy", "grim",
               "bleak", "dismal", "dreary", "miserable", "lonely", "helpless",
               "hopeless", "useless", "worthless", "pointless", "careless",
               "reckless", "rude", "unfair", "unjust", "dishonest", "selfish",
               "greedy", "jealous", "envious", "harsh", "hostile", "mean",
               "cruel", "creepy", "scary", "frightening", "alarming",
               "worrying", "troubling", "disturbing", "stressful", "painful",
               "sore", "sick", "nauseous", "dizzy", "weak", "feeble",
               "fragile", "faulty", "defective", "unreliable", "unstable",
               "insecure", "unsafe", "risky", "dangerous", "harmful", "toxic",
               "rotten", "smelly", "stinky", "disappointing", "frustrating",
               "irritating", "aggravating", "uncomfortable", "inconvenient",
               "unacceptable", "inadequate", "insufficient", "incompetent",
               "inefficient", "ineffective", "clueless", "anxious", "nervous",
               "fearful", "uncool"]),
    (-2, "A", ["upset", "annoyed", "annoying", "cold", "ill", "unwell",
               "broken", "damaged", "polluted", "contaminated", "moldy",
               "spoiled", "disappointed", "frustrated", "irritated", "afraid",
               "worried", "troubled", "stressed", "exhausted", "drained",
               "burnt", "overworked", "underpaid", "expensive", "costlier",
               "worse", "sadder", "angrier", "uglier", "sicker", "weaker",
               "slower", "dirtier", "messier", "poorer", "lonesome"]),
    (-2, "v", ["annoy", "anger", "irritate", "frustrate", "disappoint",
               "discourage", "dishearten", "dismay", "distress", "disturb",
               "trouble", "stress", "strain", "struggle", "suffer", "ache",
               "harm", "damage", "spoil", "waste", "fail", "miss", "blame",
               "accuse", "argue", "quarrel", "shout", "yell", "scream", "cry",
               "whine", "moan", "groan", "dread", "fear", "scare", "frighten",
               "threaten", "warn", "reject", "refuse", "deny", "cancel",
               "decline", "abandon", "neglect", "deceive", "cheat", "exclude",
               "offend", "insult", "mock", "ridicule", "shame", "embarrass",
               "humiliate", "sadden", "crash", "collapse", "crumble", "leak",
               "rust", "decay", "worsen"]),
    (-2, "V", ["regret", "rot"]),
    (-2, "n", ["problem", "failure", "loss", "mistake", "error", "fault",
               "defect", "injury", "wound", "bruise", "illness", "disease",
               "infection", "virus", "fever", "headache", "burden", "obstacle",
               "barrier", "risk", "danger", "threat", "warning", "worry",
               "sorrow", "regret", "conflict", "dispute", "argument", "fight",
               "crisis", "liar", "thief", "scam", "fraud", "debt", "penalty",
               "complication", "accident", "collision", "breakdown", "mess",
               "insult", "offense", "enemy"]),
    (-2, "N", ["pain", "stress", "anxiety", "panic", "dread", "sadness",
               "grief", "misery", "despair", "shame", "guilt", "embarrassment",
               "chaos", "junk", "trash", "garbage", "pollution", "gridlock",
               "congestion", "trouble", "harm", "damage", "waste", "fear"]),
    (-2, "x", ["badly", "poorly", "sadly", "angrily", "unfairly", "painfully",
               "failed", "failing", "fails", "losing", "loses", "lost", "lose",
               "missed", "missing", "regrets", "hurt", "hurts", "hurting",
               "wasted", "wasteful", "broke", "bust", "downhill", "downside",
               "letdown", "subpar", "crummy", "lame", "cheesy", "cringe",
               "cringey", "yuck", "yikes", "eww", "boo", "unlucky",
               "unluckily", "sucks", "sucked", "sucking", "flop", "flopped",
               "flops", "ripoff", "fought", "fighting", "fights", "wept",
               "weeping", "weeps", "weep", "panicked", "panicking", "panics",
               "stink", "stinks", "stinking", "stank", "upsetting", "upsets",
               "misled", "mislead", "misleads", "misleading"]),
    # ----- -3 -----
    (-3, "a", ["awful", "terrible", "horrible", "dreadful", "disgusting",
               "revolting", "repulsive", "hideous", "vile", "foul", "wretched",
               "horrid", "ghastly", "appalling", "atrocious", "abysmal",
               "deplorable", "despicable", "detestable", "shameful",
               "disgraceful", "scandalous", "outrageous", "intolerable",
               "unbearable", "horrendous", "tragic", "catastrophic",
               "disastrous", "ruinous", "agonizing", "excruciating",
               "traumatic", "terrifying", "horrifying", "nightmarish",
               "furious", "hateful", "vicious", "brutal", "savage", "ruthless",
               "merciless", "heartless", "evil", "wicked", "sinister",
               "corrupt", "criminal", "violent", "abusive", "poisonous",
               "deadly"]),
    (-3, "A", ["heartbreaking", "heartbroken", "devastated", "devastating",
               "enraged", "livid", "lethal", "fatal"]),
    (-3, "v", ["hate", "despise", "detest", "loathe", "disgust", "revolt",
               "repulse", "sicken", "appall", "horrify", "terrify", "torment",
               "torture", "abuse", "assault", "attack", "betray", "destroy",
               "devastate", "ruin", "wreck", "shatter", "crush", "curse",
               "condemn", "denounce", "enrage", "infuriate", "outrage",
               "traumatize", "victimize", "bully", "harass", "menace",
               "terrorize", "poison", "vandalize"]),
    (-3, "V", ["rob"]),
    (-3, "n", ["disaster", "catastrophe", "tragedy", "nightmare", "horror",
               "atrocity", "betrayal", "crime", "injustice", "scandal",
               "disgrace", "humiliation", "wreck", "emergency", "plague",
               "epidemic", "famine", "villain", "monster", "bully", "curse",
               "outrage"]),
    (-3, "N", ["terror", "agony", "anguish", "torment", "torture", "trauma",
               "cruelty", "hatred", "rage", "fury", "wrath", "violence",
               "corruption", "devastation", "destruction", "ruin", "poverty"]),
    (-3, "x", ["hated", "hates", "hating", "hater", "haters", "awfully",
               "terribly", "horribly", "tragically", "brutally", "viciously",
               "worst", "damn", "damned", "damnit", "dammit", "crap", "crappy",
               "screwed", "doomed", "dying", "died", "dies", "die", "dead",
               "death", "deaths", "kill", "killed", "killing", "kills",
               "murder", "murdered", "murders", "cruelly", "suffering",
               "suffered", "suffers", "grieving", "grieved", "grieves",
               "grieve", "heartbreak", "heartbreaks", "steal", "steals",
               "stealing", "stole", "stolen", "despairing"]),
    # ----- -4 -----
    (-4, "a", ["monstrous", "barbaric", "inhuman", "inhumane", "sadistic",
               "depraved", "obscene", "grotesque", "diabolical", "demonic",
               "genocidal", "murderous"]),
    (-4, "v", ["annihilate", "butcher", "slaughter", "massacre", "exterminate",
               "obliterate", "eradicate", "decimate", "mutilate", "maim",
               "strangle", "suffocate", "enslave"]),
    (-4, "n", ["massacre", "genocide", "abomination", "apocalypse",
               "bloodbath", "terrorist", "hellhole"]),
    (-4, "N", ["carnage", "tyranny", "terrorism", "slavery", "annihilation",
               "extermination", "hell", "holocaust"]),
    (-4, "x", ["fuck", "fucked", "fucking", "fucks", "fucker", "fuckers",
               "shit", "shitty", "shits", "bullshit", "horseshit", "asshole",
               "assholes", "bastard", "bastards", "bitch", "bitches", "bitchy",
               "prick", "pricks", "douche", "douchebag", "dick", "dickhead",
               "piss", "pissed", "pisses", "pissing", "motherfucker",
               "motherfucking", "goddamn", "goddamned"]),
    # ----- -5 -----
    (-5, "x", ["catastrophically", "apocalyptic", "hellish", "unforgivable",
               "unspeakable", "irredeemable", "horrifically", "monstrously",
               "abominable", "accursed"]),
]


def expand():
    lexicon: dict[str, int] = {}

    def put(word, score):
        if word is None:
            return
        word = word.strip().lower()
        if not word:
            return
        if not all(c.isalpha() or c in "'’" for c in word):
            return
        if word in NEGATORS or word.endswith(("n't", "n’t")):
            return
        if word in ACRONYM_KEYS:
            return
        lexicon.setdefault(word, score)

    for score, kind, words in ENTRIES:
        for w in words:
            put(w, score)
            if kind in ("v", "V"):
                double = kind == "V"
                put(s_form(w), score)
                put(ed_form(w, double), score)
                put(ing_form(w, double), score)
            elif kind == "a":
                put(ly_form(w), score)
            elif kind == "n":
                put(s_form(w), score)
    return lexicon


def main():
    lexicon = expand()
    lines = [
        "# Project-curated sentiment valence lexicon.",
        "# Integer scores in [-5, +5] on the common AFINN-style scale; no zeros.",
        "# Hand-scored stems expanded with regular inflections by",
        "# scripts/gen_sentiment_lexicon.py. word<TAB>score, keys lowercase.",
    ]
    for word in sorted(lexicon):
        lines.append(f"{word}\t{lexicon[word]}")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lexicon)} entries to {OUT}")


if __name__ == "__main__":
    main()
