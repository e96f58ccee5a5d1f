"""
Leuvenshtein - Encrypted Edit Distance Simulator

Verifiable model of single-bootstrap-per-cell Levenshtein distance under
TFHE-style encryption. Built with:
- A simulated ciphertext backend with negacyclic programmable bootstrapping
  and a symbolic noise ledger
- Packed 18-entry min lookups, 4-bit and ASCII equality circuits
- Band skipping and plaintext-side preprocessing tables
- Plaintext oracles and a CLI bench harness for PBS accounting
"""

__version__ = "1.0.0"
__app_name__ = "Leuvenshtein"
