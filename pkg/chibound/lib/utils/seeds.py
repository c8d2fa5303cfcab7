from hashlib import blake2b

__all__ = ("derive_seed",)


def derive_seed(seed: int, *parts: object) -> int:
    """
    Derive an independent 64-bit seed from `seed` and any number of labels.

    Used to give every campaign item its own deterministic random stream, so that
    results do not depend on how items are spread across workers.
    """
    h = blake2b(digest_size=8)
    h.update(str(seed).encode())
    for part in parts:
        h.update(b"\x1f")
        h.update(str(part).encode())
    return int.from_bytes(h.digest(), "big")
