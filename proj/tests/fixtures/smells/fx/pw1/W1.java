package fx.pw1;

public class W1 {
    public int get() { return 1; }
    public int one() { return 1; }
    public int two() { return 2; }
    public int three() { return 3; }
}
