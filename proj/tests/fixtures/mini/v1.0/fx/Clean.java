package fx;

/** Control: nothing here should fire. */
public class Clean {
    private int count;
    private String name = "";

    public Clean(String name) { this.name = name; }

    public int count() { return count; }

    public void add(int n) {
        if (n > 0) {
            count += n;
        }
    }

    public String describe() { return name + ":" + count; }
}
