package fx;

class RefusedChild extends BequestParent {
    private int own;

    int alpha() { return own; }
    int beta() { return own + 1; }
    int gamma() { return own + 2; }
    void delta() { own = 3; }
}
