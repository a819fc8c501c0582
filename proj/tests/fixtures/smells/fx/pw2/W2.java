package fx.pw2;

public class W2 {
    public int get() { return 2; }
    public int one() { return 1; }
    public int two() { return 2; }
    public int three() { return 3; }
}
