package fx;

class Provider1 {
    int value() { return 1; }
    int doubled() { return 2 * 1; }
    int squared() { return 1 * 1; }
    int negated() { return -1; }
}
