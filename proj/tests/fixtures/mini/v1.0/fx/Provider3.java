package fx;

class Provider3 {
    int value() { return 3; }
    int doubled() { return 2 * 3; }
    int squared() { return 3 * 3; }
    int negated() { return -3; }
}
