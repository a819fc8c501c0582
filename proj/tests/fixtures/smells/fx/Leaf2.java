package fx;

class Leaf2 {
    int get() { return 2; }
    int next() { return 2 + 1; }
    int prev() { return 2 - 1; }
    int zero() { return 0; }
}
