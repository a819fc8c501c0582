package fx;

public class DataClass {
    public int id;
    public int year;
    public int month;
    public int day;
    public int owner;
    public int flags;
    private int hidden;
    private int secret;

    public int getHidden() { return hidden; }
    public void setHidden(int v) { hidden = v; }
    public int getSecret() { return secret; }
    public void setSecret(int v) { secret = v; }
}
