import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_bar(opacity=0.8).encode(
    x=alt.X("cylinders:O", title="Cylinders"),
    y=alt.Y("mean(mpg):Q", title="Miles per gallon"),
    color=alt.Color("origin:N", title="Origin"),
    tooltip=["cylinders", "mpg", "origin"],
)
chart = chart.properties(title="Mean efficiency by cylinders and origin", width=480, height=320)
chart = chart.configure_axis(labelFontSize=11, titleFontSize=13)
chart.save("chart.html")
