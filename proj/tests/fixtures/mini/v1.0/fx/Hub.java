package fx;

class Hub {
    private final Provider1 p1 = new Provider1();
    private final Provider2 p2 = new Provider2();
    private final Provider3 p3 = new Provider3();

    int combine() { return p1.value() + p2.value() + p3.value(); }
    int first() { return p1.doubled(); }
    int second() { return p2.doubled(); }
    int third() { return p3.doubled(); }
}
