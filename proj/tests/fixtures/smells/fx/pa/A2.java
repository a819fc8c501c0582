package fx.pa;

public class A2 {
    public int value() { return 2; }
    public int one() { return 1; }
    public int two() { return 2; }
    public int three() { return 3; }
}
