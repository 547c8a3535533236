#!/usr/bin/env python3
"""
q-Harmonic Verification Engine

    python run.py --min 5 --max 97 --checks theorem1,lemma2w,lemma2p
"""
import sys

from qharmonic.cli import main

if __name__ == '__main__':
    sys.exit(main())
