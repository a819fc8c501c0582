package fx.pb;

import fx.pa.A2;

public class B2 {
    public int call(A2 a) { return a.value(); }
    public int one() { return 1; }
    public int two() { return 2; }
    public int three() { return 3; }
}
