package fx.pu;

class U2 {
    int assist() { return 4; }
    int one() { return 1; }
    int two() { return 2; }
    int three() { return 3; }
}
