package fx;

class Leaf1 {
    int get() { return 1; }
    int next() { return 1 + 1; }
    int prev() { return 1 - 1; }
    int zero() { return 0; }
}
