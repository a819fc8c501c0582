package fx.pb;

public class B1 {
    public int value() { return 1; }
    public int one() { return 1; }
    public int two() { return 2; }
    public int three() { return 3; }
}
