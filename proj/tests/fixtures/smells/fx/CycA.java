package fx;

class CycA {
    int ping(CycB other, int depth) { return depth <= 0 ? 0 : other.pong(this, depth - 1); }
    int left(Leaf1 leaf) { return leaf.get(); }
    int right(Leaf2 leaf) { return leaf.get(); }
    int idle() { return 0; }
}
