package fx;

class Holder3 {
    int value;
    int spare;

    int twice() { return value * 2; }
    int plus(int k) { return value + k; }
    void reset() { value = 0; }
    boolean positive() { return value > 0; }
}
