package fx.pz;

import fx.pu.U;

public class Z {
    public int use(U u) { return u.work(); }
    public int one() { return 1; }
    public int two() { return 2; }
    public int three() { return 3; }
}
