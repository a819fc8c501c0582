package fx.pu;

import fx.pv.V;

public class U {
    private final U2 helper = new U2();

    public int work() { return helper.assist() + new V().compute(); }
    public int one() { return 1; }
    public int two() { return 2; }
    public int three() { return 3; }
}
