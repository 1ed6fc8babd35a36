#!/usr/bin/env python3
# Runs both procedures and the bounded oracle on every bundled model
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from pathlib import Path

from modelfile.parser import load_model
from opacity.idtp import verify_clto_idtp
from opacity.irta import verify_clto_irta
from oracle.refute import bounded_opacity_refute
from timed.errors import ModelError
from timed.model import check_integer_resets
from utils.config import Config
from utils.logger import get_logger

MODELS = Path(__file__).parent.parent / 'models'

def main():
    config = Config()
    get_logger('', config.logging)
    depth = config.oracle.get('depth', 8)

    for path in sorted(MODELS.glob('*.ta')):
        print(f"\n📄 {path.name}")
        try:
            model, spec = load_model(path)
        except ModelError as e:
            print(f"  ❌ {e}")
            continue

        if check_integer_resets(model):
            verdict = verify_clto_irta(model, spec)
            print(f"  clto:      {verdict.label}", end='')
            print(f"  witness {' '.join(verdict.witness.observation)}" if verdict.witness else '')
        else:
            print("  clto:      skipped (not an integer-reset automaton)")

        verdict = verify_clto_idtp(model, spec)
        print(f"  clto-idtp: {verdict.label}", end='')
        print(f"  witness {' '.join(verdict.witness.observation)}" if verdict.witness else '')

        found = bounded_opacity_refute(model, spec, 'clto', depth, allow_non_irta=True)
        print(f"  oracle (exact, depth {depth}): {' '.join(found) if found else 'no violation'}")

if __name__ == "__main__":
    main()
