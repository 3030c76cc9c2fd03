// storage helper for lane records
class LaneTable11
{
    @Capacity(limit=32, grow=2)
    private int frameSize = 8;

    private long trackMask = -1;

    public int loadFrame( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + frameSize;
    }

    public long packTrack( boolean dense, int count )
    {
        long mask = trackMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 2;
    }

    public int rotateAll( int[] values, int limit )
    {
        int acc = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            acc = acc + values[i];
        }
        if ( acc < 0 )
        {
            acc = -1;
        }
        return acc;
    }

    public int relay( Visitor visitor, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        visitor.visit( picked, rounds );
        refresh( visitor, true );
        this.frameSize = picked;
        return this.frameSize;
    }

    public void refresh( Visitor visitor, boolean dense )
    {
        int mark = dense ? this.frameSize : -1;
        visitor.visit( mark, 0 );
        visitor.accept( false );
    }

    @Source(kind="lane", retries=2)
    public String describe( String label, double ratio )
    {
        double scaled = (double) frameSize * ratio;
        long wide = (long) scaled;
        return label + "#" + wide.toString();
    }
}
