import random
from typing import List, Tuple
from vkh.PDCode import PDCode, Crossing


def popcount(value: int) -> int:
    return bin(value).count('1')


def chunk_sizes(rng: random.Random, total: int, chunks: int, minimum: int) -> List[int]:
    sizes = [minimum] * chunks
    for _ in range(total - minimum * chunks):
        sizes[rng.randrange(chunks)] += 1
    return sizes


def random_pd(rng: random.Random, max_crossings: int, max_components: int) -> PDCode:
    """Draw a random signed Gauss diagram and realise it as a valid PD code.

    Every component gets at least three arcs; crossing signs are independent coin flips.
    """
    choices = [0] + list(range(2, max_crossings + 1))
    crossings = rng.choice(choices)
    if crossings == 0:
        return PDCode(())

    passages: List[Tuple[int, bool]] = [(index, under) for index in range(crossings) for under in (True, False)]
    rng.shuffle(passages)
    components = rng.randint(1, max(1, min(max_components, len(passages) // 3)))
    signs = [rng.choice((1, -1)) for _ in range(crossings)]

    slots: List[List[int]] = [[0, 0, 0, 0] for _ in range(crossings)]
    base = 1
    offset = 0
    for size in chunk_sizes(rng, len(passages), components, 3):
        chunk = passages[offset:offset + size]
        for position, (index, under) in enumerate(chunk):
            arc_in = base + position
            arc_out = base + (position + 1) % size
            if under:
                slots[index][0] = arc_in
                slots[index][2] = arc_out
            elif signs[index] > 0:
                slots[index][3] = arc_in
                slots[index][1] = arc_out
            else:
                slots[index][1] = arc_in
                slots[index][3] = arc_out
        base += size
        offset += size

    result: List[Crossing] = [(a, b, c, d) for a, b, c, d in slots]
    return PDCode(tuple(result))
