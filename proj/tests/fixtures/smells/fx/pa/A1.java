package fx.pa;

import fx.pb.B1;

public class A1 {
    public int call(B1 b) { return b.value(); }
    public int one() { return 1; }
    public int two() { return 2; }
    public int three() { return 3; }
}
