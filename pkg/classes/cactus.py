"""
Block-cactus graphs
"""
from graphs.blocks import BlockDecomposition, blocks_and_cut_vertices
from graphs.graph import Graph


def block_is_cycle(block: Graph) -> bool:
    return block.n >= 3 and all(block.degree(v) == 2 for v in block.vertices)


def block_is_complete(block: Graph) -> bool:
    return block.num_edges == block.n * (block.n - 1) // 2


def cycle_blocks(decomposition: BlockDecomposition, min_length: int = 4):
    """Indices of blocks that are cycles of at least ``min_length`` vertices"""
    result = []
    for i in range(len(decomposition.blocks)):
        block, _ = decomposition.block_graph(i)
        if block.n >= min_length and block_is_cycle(block):
            result.append(i)
    return result


def is_block_cactus(graph: Graph) -> bool:
    """Every block is a cycle or a complete graph (connected input)"""
    decomposition = blocks_and_cut_vertices(graph)
    for i in range(len(decomposition.blocks)):
        block, _ = decomposition.block_graph(i)
        if not (block_is_complete(block) or block_is_cycle(block)):
            return False
    return True
