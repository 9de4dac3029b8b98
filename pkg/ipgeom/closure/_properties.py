import json
import os

DIR = os.path.dirname(os.path.abspath(__file__))

with open(os.path.join(DIR, "examples.json"), "r") as f:
    EXAMPLES = json.load(f)
